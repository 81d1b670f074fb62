#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arith {

/// Arbitrary-precision natural number. All codes and values use this type.
using Natural = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a size or step guard.
class FeasibilityError : public Error {
public:
  using Error::Error;
};

inline Natural nat(std::uint64_t v) {
  Natural n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return n;
}

inline std::string to_string(const Natural& n) { return n.get_str(10); }

inline Natural parse_natural(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("not a decimal natural: '" + s + "'");
  return Natural(s, 10);
}

inline bool fits_u64(const Natural& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Natural& n) {
  if (!fits_u64(n)) throw FeasibilityError("natural too large for machine word");
  std::uint64_t v = 0;
  std::size_t count = 0;
  mpz_export(&v, &count, 1, sizeof(v), 0, 0, n.get_mpz_t());
  return count == 0 ? 0 : v;
}

/// Number of bits; 0 for zero.
inline std::uint64_t bit_length(const Natural& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Largest result we are willing to materialize by powering (in bits).
inline constexpr std::uint64_t kMaxMaterializedBits = std::uint64_t{1} << 27;

/// base^exp, refusing results past kMaxMaterializedBits.
Natural checked_pow(const Natural& base, const Natural& exp);

/// Exponent of prime p in n (n > 0); the quotient is written to rest.
std::uint64_t remove_factor(const Natural& n, const Natural& p, Natural* rest);

/// The i-th prime (p_0 = 2).
Natural nth_prime(std::uint64_t i);

bool is_prime(const Natural& n);

}  // namespace arith
