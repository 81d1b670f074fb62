#include "stdlib_impl.hpp"

namespace arith::detail {

namespace {

using namespace prb;
using Args = std::span<const Natural>;

Natural b2n(bool b) { return b ? 1 : 0; }

Natural d_mod(const Natural& x, const Natural& d) { return d == 0 ? Natural(0) : Natural(x % d); }
Natural d_quot(const Natural& x, const Natural& d) { return d == 0 ? Natural(0) : Natural(x / d); }
bool d_divides(const Natural& d, const Natural& x) { return d != 0 && x % d == 0; }

Natural d_prime(const Natural& i) {
  if (!fits_u64(i)) throw FeasibilityError("prime index too large");
  return nth_prime(to_u64(i));
}

Natural d_exp(const Natural& x, const Natural& i) {
  if (x == 0) return 1;
  const Natural p = d_prime(i);
  Natural rest;
  return nat(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Natural d_len(const Natural& x) {
  if (x == 0) return 1;
  std::uint64_t i = 0;
  while (x % nth_prime(i) == 0) ++i;
  return nat(i);
}

Natural d_numdiv(const Natural& x) {
  if (x > 10'000'000) throw FeasibilityError("divisor count argument too large");
  std::uint64_t n = 0;
  const std::uint64_t v = to_u64(x);
  for (std::uint64_t d = 1; d <= v; ++d)
    if (v % d == 0) ++n;
  return nat(n);
}

Natural d_pow(const Natural& x, const Natural& y) {
  if (!fits_u64(y)) {
    if (x <= 1) return x == 1 || y == 0 ? Natural(1) : Natural(0);
    throw FeasibilityError("exponent too large");
  }
  return checked_pow(x, to_u64(y));
}

Natural d_prodpow(const Natural& x, const Natural& k) {
  if (!fits_u64(k)) throw FeasibilityError("product length too large");
  Natural acc = 1;
  for (std::uint64_t i = 0; i < to_u64(k); ++i) acc *= d_pow(d_prime(nat(i)), d_exp(x, nat(i)));
  return acc;
}

}  // namespace

void register_arith(Registry& r) {
  const PRTerm Z = PRTerm::zero();
  const PRTerm S = PRTerm::succ();

  const auto& add = r.add("add", R(P(1, 1), C(S, {P(1, 3)})), [](Args a) { return Natural(a[0] + a[1]); }, true);
  const auto& mul = r.add("mul", R(Z, C(add, {P(1, 3), P(2, 3)})), [](Args a) { return Natural(a[0] * a[1]); }, true);
  const auto& pred = r.add("pred", rec0(0, P(2, 2)), [](Args a) { return a[0] == 0 ? Natural(0) : Natural(a[0] - 1); }, true);
  const auto& monus = r.add("monus", R(P(1, 1), C(pred, {P(1, 3)})),
                            [](Args a) { return a[0] >= a[1] ? Natural(a[0] - a[1]) : Natural(0); }, true);
  const auto& sg = r.add("sg", rec0(0, konst(1, 2)), [](Args a) { return b2n(a[0] != 0); }, true);
  const auto& sgbar = r.add("sgbar", rec0(1, konst(0, 2)), [](Args a) { return b2n(a[0] == 0); }, true);
  const PRTerm monus_rev = C(monus, {P(2, 2), P(1, 2)});
  const auto& chi_eq = r.add("chi_eq", C(sgbar, {C(add, {monus, monus_rev})}),
                             [](Args a) { return b2n(a[0] == a[1]); }, true);
  r.add("chi_le", C(sgbar, {monus}), [](Args a) { return b2n(a[0] <= a[1]); }, true);
  const auto& chi_lt = r.add("chi_lt", C(sg, {monus_rev}), [](Args a) { return b2n(a[0] < a[1]); });
  const auto& pow = r.add("pow", R(konst(1), C(mul, {P(1, 3), P(2, 3)})), [](Args a) { return d_pow(a[0], a[1]); }, true);

  // rem(d, x+1) = S(rem) if S(rem) < d, else 0.
  const PRTerm Sh = C(S, {P(1, 3)});
  const auto& rem = r.add("rem", R(Z, C(mul, {Sh, C(sg, {C(monus, {P(2, 3), Sh})})})),
                          [](Args a) { return d_mod(a[1], a[0]); });
  const auto& mod = r.add("mod", C(rem, {P(2, 2), P(1, 2)}), [](Args a) { return d_mod(a[0], a[1]); });
  const PRTerm multiple = C(mul, {C(sg, {P(2, 3)}), C(sgbar, {C(rem, {P(2, 3), C(S, {P(3, 3)})})})});
  const auto& quot_rev = r.add("quot_rev", R(Z, C(add, {P(1, 3), multiple})),
                               [](Args a) { return d_quot(a[1], a[0]); });
  const auto& quot = r.add("quot", C(quot_rev, {P(2, 2), P(1, 2)}), [](Args a) { return d_quot(a[0], a[1]); });
  const auto& divides = r.add("divides", C(mul, {C(sg, {P(1, 2)}), C(sgbar, {C(mod, {P(2, 2), P(1, 2)})})}),
                              [](Args a) { return b2n(d_divides(a[0], a[1])); });
  const auto& numdiv = r.add("numdiv", C(bsum(C(divides, {P(2, 2), P(1, 2)})), {P(1, 1), P(1, 1)}),
                             [](Args a) { return d_numdiv(a[0]); });
  const auto& isprime = r.add("isprime", C(chi_eq, {numdiv, konst(2, 1)}),
                              [](Args a) { return b2n(a[0] >= 2 && is_prime(a[0])); });
  const PRTerm above_prime = C(mul, {chi_lt, C(isprime, {P(2, 2)})});
  const PRTerm two_x_two = C(S, {C(S, {C(add, {P(1, 1), P(1, 1)})})});
  const auto& nextprime = r.add("nextprime", C(bmu(above_prime), {P(1, 1), two_x_two}), [](Args a) {
    Natural p;
    mpz_nextprime(p.get_mpz_t(), a[0].get_mpz_t());
    return p;
  });
  const auto& prime = r.add("prime", rec0(2, C(nextprime, {P(1, 2)})), [](Args a) { return d_prime(a[0]); }, true);

  // exp(x, i) = least e <= x with not p_i^(e+1) | x.
  const PRTerm no_higher = C(sgbar, {C(divides, {C(pow, {C(prime, {P(2, 3)}), C(S, {P(3, 3)})}), P(1, 3)})});
  const auto& exp = r.add("exp", C(bmu(no_higher), {P(1, 2), P(2, 2), P(1, 2)}),
                          [](Args a) { return d_exp(a[0], a[1]); });
  const PRTerm prime_absent = C(sgbar, {C(divides, {C(prime, {P(2, 2)}), P(1, 2)})});
  const auto& len = r.add("len", C(bmu(prime_absent), {P(1, 1), P(1, 1)}), [](Args a) { return d_len(a[0]); }, true);
  const auto& idx = r.add("idx", C(pred, {exp}), [](Args a) {
    const Natural e = d_exp(a[0], a[1]);
    return e == 0 ? e : Natural(e - 1);
  }, true);
  r.add("last", C(idx, {P(1, 1), C(pred, {len})}), [](Args a) {
    const Natural l = d_len(a[0]);
    const Natural e = d_exp(a[0], l == 0 ? Natural(0) : Natural(l - 1));
    return e == 0 ? e : Natural(e - 1);
  }, true);

  const PRTerm factor = C(pow, {C(prime, {P(3, 3)}), C(exp, {P(2, 3), P(3, 3)})});
  const auto& prodpow = r.add("prodpow", R(konst(1), C(mul, {P(1, 3), factor})),
                              [](Args a) { return d_prodpow(a[0], a[1]); });
  r.add("seq_test", C(chi_eq, {P(1, 1), C(prodpow, {P(1, 1), len})}),
        [](Args a) { return b2n(a[0] == d_prodpow(a[0], d_len(a[0]))); }, true);

  // replace(z, r, k): the k-th element of z set to r, or z when k >= len(z).
  const PRTerm pk = C(prime, {P(3, 3)});
  const PRTerm inside = C(chi_lt, {P(3, 3), C(len, {P(1, 3)})});
  const PRTerm rebuilt =
      C(mul, {C(quot, {P(1, 3), C(pow, {pk, C(exp, {P(1, 3), P(3, 3)})})}), C(pow, {pk, C(S, {P(2, 3)})})});
  r.add("replace", C(add, {C(mul, {inside, rebuilt}), C(mul, {C(sgbar, {inside}), P(1, 3)})}), [](Args a) {
    const Natural &z = a[0], &v = a[1], &k = a[2];
    if (k >= d_len(z)) return z;
    const Natural p = d_prime(k);
    return Natural(d_quot(z, d_pow(p, d_exp(z, k))) * d_pow(p, v + 1));
  }, true);

  r.add("pair3",
        C(mul, {C(mul, {C(pow, {konst(2, 3), P(1, 3)}), C(pow, {konst(3, 3), P(2, 3)})}),
                C(pow, {konst(5, 3), P(3, 3)})}),
        [](Args a) { return Natural(d_pow(2, a[0]) * d_pow(3, a[1]) * d_pow(5, a[2])); }, true);
}

}  // namespace arith::detail
