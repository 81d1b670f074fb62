#include "arith/coding.hpp"

#include "bytes.hpp"

namespace arith {

using detail::Bytes;
using detail::from_bytes;
using detail::to_bytes;

Scheme parse_scheme(std::string_view s) {
  if (s == "paper") return Scheme::Paper;
  if (s == "compact") return Scheme::Compact;
  throw Error("unknown scheme '" + std::string(s) + "' (expected paper or compact)");
}

std::string to_string(Scheme s) { return s == Scheme::Paper ? "paper" : "compact"; }

Natural seq_encode(Scheme s, const std::vector<Natural>& xs) {
  if (s == Scheme::Paper) {
    Natural acc = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) acc *= checked_pow(nth_prime(i), xs[i] + 1);
    return acc;
  }
  Bytes out{12};
  for (const auto& x : xs) {
    const Bytes b = to_bytes(x);
    if (b.size() > 255) throw FeasibilityError("sequence element longer than 255 bytes");
    out.push_back(static_cast<std::uint8_t>(b.size()));
    out.insert(out.end(), b.begin(), b.end());
  }
  return from_bytes(out);
}

std::optional<std::vector<Natural>> seq_decode(Scheme s, const Natural& c) {
  std::vector<Natural> out;
  if (s == Scheme::Paper) {
    if (c == 0) return std::nullopt;
    Natural rest = c;
    for (std::uint64_t i = 0;; ++i) {
      const Natural p = nth_prime(i);
      Natural q;
      const std::uint64_t e = remove_factor(rest, p, &q);
      if (e == 0) break;
      out.push_back(nat(e - 1));
      rest = q;
    }
    if (rest != 1) return std::nullopt;
    return out;
  }
  const Bytes b = to_bytes(c);
  if (b.empty() || b[0] != 12) return std::nullopt;
  std::size_t pos = 1;
  while (pos < b.size()) {
    const std::size_t len = b[pos];
    if (pos + 1 + len > b.size()) return std::nullopt;
    if (len > 0 && b[pos + 1] == 0) return std::nullopt;
    out.push_back(from_bytes(b.data() + pos + 1, len));
    pos += 1 + len;
  }
  return out;
}

bool seq_test(Scheme s, const Natural& c) { return seq_decode(s, c).has_value(); }

namespace {

std::vector<Natural> must_decode(Scheme s, const Natural& c) {
  auto xs = seq_decode(s, c);
  if (!xs) throw Error("not a sequence code: " + to_string(c));
  return std::move(*xs);
}

}  // namespace

std::size_t seq_len(Scheme s, const Natural& c) { return must_decode(s, c).size(); }

Natural seq_idx(Scheme s, const Natural& c, std::size_t i) {
  auto xs = must_decode(s, c);
  if (i >= xs.size())
    throw Error("sequence index " + std::to_string(i) + " out of range (length " + std::to_string(xs.size()) + ")");
  return xs[i];
}

Natural seq_last(Scheme s, const Natural& c) {
  auto xs = must_decode(s, c);
  if (xs.empty()) throw Error("last of the empty sequence");
  return xs.back();
}

Natural seq_replace(Scheme s, const Natural& z, const Natural& r, std::size_t k) {
  auto xs = must_decode(s, z);
  if (k >= xs.size()) return z;
  xs[k] = r;
  return seq_encode(s, xs);
}

Natural triple(Scheme s, const Natural& i, const Natural& z, const Natural& w) {
  if (s == Scheme::Compact) return seq_encode(s, {i, z, w});
  return checked_pow(2, i) * checked_pow(3, z) * checked_pow(5, w);
}

std::optional<std::array<Natural, 3>> untriple(Scheme s, const Natural& c) {
  if (s == Scheme::Compact) {
    auto xs = seq_decode(s, c);
    if (!xs || xs->size() != 3) return std::nullopt;
    return std::array<Natural, 3>{(*xs)[0], (*xs)[1], (*xs)[2]};
  }
  if (c == 0) return std::nullopt;
  std::array<Natural, 3> out;
  Natural rest = c;
  const unsigned primes[] = {2, 3, 5};
  for (int k = 0; k < 3; ++k) out[k] = nat(remove_factor(rest, primes[k], &rest));
  if (rest != 1) return std::nullopt;
  return out;
}

BoundKind parse_boundkind(std::string_view s) {
  if (s == "buildseq") return BoundKind::BuildSeq;
  if (s == "termval") return BoundKind::TermVal;
  throw Error("unknown bound kind '" + std::string(s) + "' (expected buildseq or termval)");
}

Lazy paper_bound(BoundKind k, const Natural& x, const Natural& z) {
  const Lazy X = Lazy::constant(x);
  if (k == BoundKind::BuildSeq) {
    const Lazy x1 = Lazy::add(X, Lazy::constant(1));
    return Lazy::pow(Lazy::prime(X), Lazy::mul(x1, x1));
  }
  return Lazy::pow(Lazy::prime(X), Lazy::add(Lazy::pow(Lazy::constant(z), X), Lazy::constant(1)));
}

}  // namespace arith
