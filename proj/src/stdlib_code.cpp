#include "stdlib_impl.hpp"

// Syntax-coding functions for both schemes, as combinator terms.
namespace arith::detail {

namespace {

using namespace prb;
using Args = std::span<const Natural>;

Natural b2n(bool b) { return b ? 1 : 0; }

std::uint64_t small(const Natural& x, const char* what) {
  if (!fits_u64(x) || x > nat(1) << 40) throw FeasibilityError(std::string(what) + " too large");
  return to_u64(x);
}

Natural p256(std::uint64_t k) {
  if (k > kMaxMaterializedBits / 8) throw FeasibilityError("byte shift too large");
  Natural r = 1;
  r <<= static_cast<mp_bitcnt_t>(8 * k);
  return r;
}

std::uint64_t d_bl(const Natural& x) { return (bit_length(x) + 7) / 8; }

std::uint64_t d_byte(const Natural& x, const Natural& i) {
  const std::uint64_t n = d_bl(x);
  if (i >= n) return 0;
  const std::uint64_t k = to_u64(i);
  Natural q = x >> static_cast<mp_bitcnt_t>(8 * (n - k - 1));
  return to_u64(Natural(q & 255));
}

Natural d_cat(const Natural& a, const Natural& b) { return a * p256(d_bl(b)) + b; }

Natural d_coff(const Natural& x, const Natural& k) {
  const std::uint64_t n = d_bl(x);
  Natural o = 1;
  Natural left = k;
  while (left > 0 && o < n) {
    o += 1 + d_byte(x, o);
    --left;
  }
  return o + left;
}

Natural d_clen(const Natural& x) {
  const std::uint64_t n = d_bl(x);
  for (std::uint64_t k = 0; k <= n; ++k)
    if (d_coff(x, nat(k)) >= n) return nat(k);
  return nat(n + 1);
}

Natural d_cidx(const Natural& x, const Natural& i) {
  const Natural o = d_coff(x, i);
  const std::uint64_t len = d_byte(x, o);
  const Natural end = o + 1 + len;
  const Natural n = nat(d_bl(x));
  const std::uint64_t shift = end >= n ? 0 : small(n - end, "byte offset");
  return Natural((x >> static_cast<mp_bitcnt_t>(8 * shift)) % p256(len));
}

bool d_cseq_test(const Natural& x) {
  if (d_byte(x, 0) != 12) return false;
  const Natural len = d_clen(x);
  if (d_coff(x, len) != d_bl(x)) return false;
  for (Natural i = 0; i < len; ++i) {
    const Natural o = d_coff(x, i);
    if (d_byte(x, o) != 0 && d_byte(x, o + 1) == 0) return false;
  }
  return true;
}

Natural d_creplace(const Natural& z, const Natural& r, const Natural& k) {
  if (k >= d_clen(z)) return z;
  const std::uint64_t n = d_bl(z);
  const std::uint64_t o = small(d_coff(z, k), "offset");
  const std::uint64_t e = o + 1 + d_byte(z, nat(o));
  const std::uint64_t rl = d_bl(r);
  const Natural prefix = z >> static_cast<mp_bitcnt_t>(8 * (n > o ? n - o : 0));
  const std::uint64_t slen = n > e ? n - e : 0;
  const Natural suffix = z % p256(slen);
  return ((prefix * 256 + rl) * p256(rl) + r) * p256(slen) + suffix;
}

Natural d_cat_el(const Natural& s, const Natural& e) { return d_cat(s * 256 + d_bl(e), e); }

Natural d_seqp(std::initializer_list<Natural> xs) {
  Natural acc = 1;
  std::uint64_t i = 0;
  for (const auto& x : xs) {
    if (!fits_u64(x)) throw FeasibilityError("sequence element too large for prime-power coding");
    acc *= checked_pow(nth_prime(i++), to_u64(x) + 1);
  }
  return acc;
}

}  // namespace

void register_coding(Registry& r) {
  const PRTerm S = PRTerm::succ();
  const PRTerm& add = r.get("add");
  const PRTerm& mul = r.get("mul");
  const PRTerm& pow = r.get("pow");
  const PRTerm& pred = r.get("pred");
  const PRTerm& monus = r.get("monus");
  const PRTerm& sg = r.get("sg");
  const PRTerm& sgbar = r.get("sgbar");
  const PRTerm& chi_eq = r.get("chi_eq");
  const PRTerm& chi_le = r.get("chi_le");
  const PRTerm& chi_lt = r.get("chi_lt");
  const PRTerm& quot = r.get("quot");
  const PRTerm& mod = r.get("mod");
  auto AND = [&](PRTerm a, PRTerm b) { return C(mul, {std::move(a), std::move(b)}); };
  auto OR = [&](PRTerm a, PRTerm b) { return C(sg, {C(add, {std::move(a), std::move(b)})}); };

  // ---- compact scheme: big-endian byte strings ----
  const auto& pw256 = r.add("pow256", C(pow, {konst(256), P(1, 1)}), [](Args a) { return p256(small(a[0], "byte count")); });
  const auto& bl = r.add("bl", C(bmu(C(chi_lt, {P(1, 2), C(pw256, {P(2, 2)})})), {P(1, 1), P(1, 1)}),
                         [](Args a) { return nat(d_bl(a[0])); });
  // byte(x, i): i-th byte from the most significant end, 0 past the end.
  const PRTerm blx = C(bl, {P(1, 2)});
  const auto& byte = r.add(
      "byte",
      AND(C(chi_lt, {P(2, 2), blx}),
          C(mod, {C(quot, {P(1, 2), C(pw256, {C(monus, {blx, C(S, {P(2, 2)})})})}), konst(256, 2)})),
      [](Args a) { return nat(d_byte(a[0], a[1])); });
  const auto& cat = r.add("cat", C(add, {C(mul, {P(1, 2), C(pw256, {C(bl, {P(2, 2)})})}), P(2, 2)}),
                          [](Args a) { return d_cat(a[0], a[1]); });
  const auto& cat_el = r.add("cat_el", C(cat, {C(add, {C(mul, {P(1, 2), konst(256, 2)}), C(bl, {P(2, 2)})}), P(2, 2)}),
                             [](Args a) { return d_cat_el(a[0], a[1]); });
  // coff(x, 0) = 1; coff(x, k+1) = coff + 1 + byte(x, coff)
  const auto& coff = r.add("coff", R(konst(1), C(add, {C(S, {P(1, 3)}), C(byte, {P(2, 3), P(1, 3)})})),
                           [](Args a) { return d_coff(a[0], a[1]); });
  const auto& clen = r.add("clen", C(bmu(C(chi_le, {C(bl, {P(1, 2)}), coff})), {P(1, 1), C(bl, {P(1, 1)})}),
                           [](Args a) { return d_clen(a[0]); });
  const PRTerm off2 = coff;  // (x, i)
  const PRTerm L2 = C(byte, {P(1, 2), off2});
  const PRTerm end2 = C(S, {C(add, {off2, L2})});
  const auto& cidx = r.add(
      "cidx", C(mod, {C(quot, {P(1, 2), C(pw256, {C(monus, {blx, end2})})}), C(pw256, {L2})}),
      [](Args a) { return d_cidx(a[0], a[1]); });
  r.add("clast", C(cidx, {P(1, 1), C(pred, {clen})}),
        [](Args a) {
          const Natural l = d_clen(a[0]);
          return d_cidx(a[0], l == 0 ? l : Natural(l - 1));
        });
  {
    const PRTerm len_x = C(clen, {P(1, 2)});
    const PRTerm canonical = OR(C(sgbar, {C(chi_lt, {P(2, 2), len_x})}),
                                OR(C(sgbar, {L2}), C(sg, {C(byte, {P(1, 2), C(S, {off2})})})));
    const PRTerm all_canonical = rel_combine(RelOp::BForall, {canonical, clen});
    const PRTerm marker = C(chi_eq, {C(byte, {P(1, 1), konst(0, 1)}), konst(12, 1)});
    const PRTerm exact_end = C(chi_eq, {C(coff, {P(1, 1), clen}), C(bl, {P(1, 1)})});
    r.add("cseq_test", AND(marker, AND(exact_end, all_canonical)), [](Args a) { return b2n(d_cseq_test(a[0])); });
  }
  {
    // (z, r, k)
    const PRTerm o = C(coff, {P(1, 3), P(3, 3)});
    const PRTerm n = C(bl, {P(1, 3)});
    const PRTerm e = C(S, {C(add, {o, C(byte, {P(1, 3), o})})});
    const PRTerm rl = C(bl, {P(2, 3)});
    const PRTerm slen = C(monus, {n, e});
    const PRTerm prefix = C(quot, {P(1, 3), C(pw256, {C(monus, {n, o})})});
    const PRTerm suffix = C(mod, {P(1, 3), C(pw256, {slen})});
    const PRTerm head = C(add, {C(mul, {prefix, konst(256, 3)}), rl});
    const PRTerm body = C(add, {C(mul, {head, C(pw256, {rl})}), P(2, 3)});
    const PRTerm rebuilt = C(add, {C(mul, {body, C(pw256, {slen})}), suffix});
    const PRTerm inside = C(chi_lt, {P(3, 3), C(clen, {P(1, 3)})});
    r.add("creplace", C(add, {AND(inside, rebuilt), AND(C(sgbar, {inside}), P(1, 3))}),
          [](Args a) { return d_creplace(a[0], a[1], a[2]); });
  }
  r.add("ctriple", C(cat_el, {C(cat_el, {C(cat_el, {konst(12, 3), P(1, 3)}), P(2, 3)}), P(3, 3)}),
        [](Args a) { return d_cat_el(d_cat_el(d_cat_el(12, a[0]), a[1]), a[2]); });
  r.add("cvar", AND(C(chi_le, {konst(2816, 1), P(1, 1)}), C(chi_le, {P(1, 1), konst(3071, 1)})),
        [](Args a) { return b2n(a[0] >= 2816 && a[0] <= 3071); });
  r.add("cvar_index", C(monus, {P(1, 1), konst(2816, 1)}),
        [](Args a) { return a[0] >= 2816 ? Natural(a[0] - 2816) : Natural(0); });

  auto cat_n = [&](unsigned op, unsigned n) {
    PRTerm acc = konst(op, n);
    for (unsigned i = 1; i <= n; ++i) acc = C(cat, {acc, P(i, n)});
    return acc;
  };
  auto cat_direct = [](unsigned op) {
    return [op](Args a) {
      Natural acc = op;
      for (const auto& x : a) acc = d_cat(acc, x);
      return acc;
    };
  };
  r.add("c_add", cat_n(4, 2), cat_direct(4));
  r.add("c_mul", cat_n(5, 2), cat_direct(5));
  r.add("c_eq", cat_n(6, 2), cat_direct(6));
  r.add("c_le", cat_n(7, 2), cat_direct(7));
  r.add("c_not", cat_n(8, 1), cat_direct(8));
  r.add("c_imp", cat_n(9, 2), cat_direct(9));
  r.add("c_all", cat_n(10, 3), cat_direct(10));

  // ---- paper scheme: odd codes 2 * <op, args...> + 1 ----
  r.add("pvar", AND(C(sgbar, {C(mod, {P(1, 1), konst(2, 1)})}), C(chi_le, {konst(2, 1), P(1, 1)})),
        [](Args a) { return b2n(a[0] >= 2 && a[0] % 2 == 0); });
  r.add("pvar_index", C(quot, {C(monus, {P(1, 1), konst(2, 1)}), konst(2, 1)}),
        [](Args a) { return a[0] >= 2 ? Natural((a[0] - 2) / 2) : Natural(0); });
  auto seq_n = [&](unsigned op, unsigned n) {
    static const unsigned primes[] = {2, 3, 5, 7};
    PRTerm acc = konst(checked_pow(2, op + 1), n);
    for (unsigned i = 1; i <= n; ++i) acc = C(mul, {acc, C(pow, {konst(primes[i], n), C(S, {P(i, n)})})});
    return C(S, {C(mul, {konst(2, n), acc})});
  };
  auto seq_direct = [](unsigned op) {
    return [op](Args a) {
      Natural code;
      switch (a.size()) {
        case 1: code = d_seqp({nat(op), a[0]}); break;
        case 2: code = d_seqp({nat(op), a[0], a[1]}); break;
        default: code = d_seqp({nat(op), a[0], a[1], a[2]}); break;
      }
      return Natural(2 * code + 1);
    };
  };
  r.add("p_add", seq_n(5, 2), seq_direct(5));
  r.add("p_mul", seq_n(7, 2), seq_direct(7));
  r.add("p_eq", seq_n(9, 2), seq_direct(9));
  r.add("p_le", seq_n(11, 2), seq_direct(11));
  r.add("p_not", seq_n(13, 1), seq_direct(13));
  r.add("p_imp", seq_n(15, 2), seq_direct(15));
  r.add("p_all", seq_n(17, 3), seq_direct(17));
}

}  // namespace arith::detail
