#include "arith/lazy.hpp"

namespace arith {

Lazy Lazy::constant(Natural v) { return Lazy(std::make_shared<const Node>(Node{Kind::Const, std::move(v), {}, {}})); }
Lazy Lazy::add(Lazy a, Lazy b) { return Lazy(std::make_shared<const Node>(Node{Kind::Add, 0, a.node_, b.node_})); }
Lazy Lazy::mul(Lazy a, Lazy b) { return Lazy(std::make_shared<const Node>(Node{Kind::Mul, 0, a.node_, b.node_})); }
Lazy Lazy::pow(Lazy a, Lazy b) { return Lazy(std::make_shared<const Node>(Node{Kind::Pow, 0, a.node_, b.node_})); }
Lazy Lazy::prime(Lazy a) { return Lazy(std::make_shared<const Node>(Node{Kind::Prime, 0, a.node_, {}})); }

Natural Lazy::value() const {
  switch (kind()) {
    case Kind::Const: return node_->v;
    case Kind::Add: return Lazy(node_->a).value() + Lazy(node_->b).value();
    case Kind::Mul: {
      const Natural a = Lazy(node_->a).value();
      if (a == 0) return a;
      const Natural b = Lazy(node_->b).value();
      if (bit_length(a) + bit_length(b) > kMaxMaterializedBits) throw FeasibilityError("product too large to materialize");
      return a * b;
    }
    case Kind::Pow: return checked_pow(Lazy(node_->a).value(), Lazy(node_->b).value());
    case Kind::Prime: {
      const Natural i = Lazy(node_->a).value();
      if (!fits_u64(i)) throw FeasibilityError("prime index too large");
      return nth_prime(to_u64(i));
    }
  }
  return 0;
}

namespace {

Natural two_to(std::uint64_t bits) {
  Natural r = 1;
  r <<= static_cast<mp_bitcnt_t>(bits);
  return r;
}

Lazy::Estimate capped(Natural lo, bool exact, std::uint64_t cap) {
  if (bit_length(lo) > cap) return {two_to(cap), false};
  return {std::move(lo), exact};
}

}  // namespace

Lazy::Estimate Lazy::estimate(std::uint64_t cap) const {
  switch (kind()) {
    case Kind::Const: return capped(node_->v, true, cap);
    case Kind::Add: {
      const auto a = Lazy(node_->a).estimate(cap), b = Lazy(node_->b).estimate(cap);
      return capped(a.lo + b.lo, a.exact && b.exact, cap);
    }
    case Kind::Mul: {
      const auto a = Lazy(node_->a).estimate(cap), b = Lazy(node_->b).estimate(cap);
      if ((a.exact && a.lo == 0) || (b.exact && b.lo == 0)) return {0, true};
      if (a.lo == 0 || b.lo == 0) return {0, false};
      if (bit_length(a.lo) + bit_length(b.lo) - 2 >= cap) return {two_to(cap), false};
      return capped(a.lo * b.lo, a.exact && b.exact, cap);
    }
    case Kind::Pow: {
      const auto a = Lazy(node_->a).estimate(cap), b = Lazy(node_->b).estimate(cap);
      if (b.exact && b.lo == 0) return {1, true};
      if (a.exact && a.lo <= 1) {
        if (a.lo == 1) return {1, true};
        return b.lo >= 1 ? Estimate{0, true} : Estimate{0, false};
      }
      if (a.lo <= 1) return {0, false};
      // lo_a >= 2 from here; a^b is monotone in both arguments
      if (b.lo == 0) return {1, false};
      const std::uint64_t abits = bit_length(a.lo) - 1;
      if (!fits_u64(b.lo) || abits * to_u64(b.lo) >= cap) return {two_to(cap), false};
      Natural r;
      mpz_pow_ui(r.get_mpz_t(), a.lo.get_mpz_t(), static_cast<unsigned long>(to_u64(b.lo)));
      return capped(std::move(r), a.exact && b.exact, cap);
    }
    case Kind::Prime: {
      const auto a = Lazy(node_->a).estimate(cap);
      if (a.exact && a.lo <= kExactPrimeIndex) return {nth_prime(to_u64(a.lo)), true};
      // p_i >= i + 2
      return capped(a.lo + 2, false, cap);
    }
  }
  return {0, false};
}

std::optional<bool> Lazy::bounds(const Natural& c) const {
  const std::uint64_t cap = std::max<std::uint64_t>(kDefaultCap, bit_length(c) + 2);
  const Estimate e = estimate(cap);
  if (e.exact) return c <= e.lo;
  if (c <= e.lo) return true;
  return std::nullopt;
}

std::string Lazy::symbolic() const {
  switch (kind()) {
    case Kind::Const: return to_string(node_->v);
    case Kind::Add: return "(" + Lazy(node_->a).str() + " + " + Lazy(node_->b).str() + ")";
    case Kind::Mul: return "(" + Lazy(node_->a).str() + " * " + Lazy(node_->b).str() + ")";
    case Kind::Pow: return "(" + Lazy(node_->a).str() + ")^(" + Lazy(node_->b).str() + ")";
    case Kind::Prime: return "p_(" + Lazy(node_->a).str() + ")";
  }
  return {};
}

std::string Lazy::str() const {
  const Estimate e = estimate(4096);
  if (e.exact) return to_string(e.lo);
  return symbolic();
}

}  // namespace arith
