#pragma once

#include <cstdint>
#include <vector>

#include "arith/natural.hpp"

namespace arith::detail {

using Bytes = std::vector<std::uint8_t>;

/// Big-endian, no leading zero bytes; zero is the empty string.
inline Bytes to_bytes(const Natural& n) {
  Bytes out((bit_length(n) + 7) / 8);
  if (!out.empty()) {
    std::size_t count = 0;
    mpz_export(out.data(), &count, 1, 1, 1, 0, n.get_mpz_t());
  }
  return out;
}

inline Natural from_bytes(const std::uint8_t* p, std::size_t n) {
  Natural r;
  if (n) mpz_import(r.get_mpz_t(), n, 1, 1, 1, 0, p);
  return r;
}

inline Natural from_bytes(const Bytes& b) { return from_bytes(b.data(), b.size()); }

}  // namespace arith::detail
