#include "arith/sat.hpp"

#include <algorithm>
#include <map>

#include "defs_impl.hpp"

namespace arith {

using namespace ir;

namespace {

Valuation constant_rho(const Formula& f, const Natural& a) {
  Valuation rho;
  for (VarIndex v : free_vars(f)) rho[v] = a;
  return rho;
}

Natural lenient(const std::vector<Natural>& z, VarIndex v) { return v < z.size() ? z[v] : Natural(0); }

Natural term_value(const Term& t, const std::vector<Natural>& z) {
  Valuation rho;
  for (VarIndex v : free_vars(t)) rho[v] = lenient(z, v);
  return eval_term(t, rho);
}

class WitnessBuilder {
public:
  WitnessBuilder(Scheme sc, std::vector<Natural> elements) : sc_(sc), codes_(std::move(elements)) {
    for (const auto& c : codes_) forms_.push_back(decode_formula(sc_, c));
  }

  bool gen(std::size_t i, const Natural& z) {
    if (auto hit = done_.find({i, z}); hit != done_.end()) return hit->second;
    auto zs = seq_decode(sc_, z);
    if (!zs) throw Error("valuation is not a sequence code");
    const Formula& f = forms_[i];
    bool w = false;
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Eq: w = term_value(f.lhs(), *zs) == term_value(f.rhs(), *zs); break;
      case K::Le: w = term_value(f.lhs(), *zs) <= term_value(f.rhs(), *zs); break;
      case K::Not: w = !gen(index_of(f.sub(), i), z); break;
      case K::Implies: {
        const bool a = gen(index_of(f.first(), i), z);
        const bool b = gen(index_of(f.second(), i), z);
        w = !a || b;
        break;
      }
      case K::BForall: {
        const std::size_t j = index_of(f.body(), i);
        const Natural x = term_value(f.bound(), *zs);
        if (x > 1'000'000) throw FeasibilityError("quantifier bound too large: " + to_string(x));
        w = true;
        for (Natural r = 0; r <= x; ++r) w = gen(j, seq_replace(sc_, z, r, f.var())) && w;
        break;
      }
      default: throw Error("not a core Delta0 formula: " + print(f));
    }
    done_.emplace(std::pair{i, z}, w);
    triples_.push_back({Natural(i), z, Natural(w)});
    return w;
  }

  std::vector<std::array<Natural, 3>> triples() const { return triples_; }

private:
  std::size_t index_of(const Formula& sub, std::size_t before) const {
    const Natural c = encode(sc_, sub);
    for (std::size_t j = 0; j < before; ++j)
      if (codes_[j] == c) return j;
    throw Error("not a building sequence: " + print(sub) + " is missing");
  }

  Scheme sc_;
  std::vector<Natural> codes_;
  std::vector<Formula> forms_;
  std::map<std::pair<std::size_t, Natural>, bool> done_;
  std::vector<std::array<Natural, 3>> triples_;
};

// positions p with [t]_p = <j, z', _>
Provider positions(Scheme sc, Expr t, Expr j, Expr z) {
  return [=](const Env& env) {
    std::vector<Natural> out;
    auto ts = seq_decode(sc, eval_expr(t, env));
    if (!ts) return out;
    const Natural jv = eval_expr(j, env), zv = eval_expr(z, env);
    for (std::size_t p = 0; p < ts->size(); ++p) {
      auto tr = untriple(sc, (*ts)[p]);
      if (tr && (*tr)[0] == jv && (*tr)[1] == zv) out.push_back(p);
    }
    return out;
  };
}

Provider component(Scheme sc, Expr code, std::size_t k) {
  return [=](const Env& env) -> std::vector<Natural> {
    auto tr = untriple(sc, eval_expr(code, env));
    if (!tr) return {};
    return {(*tr)[k]};
  };
}

Fn make_satseq(Scheme sc) {
  const Vocab& w = vocab(sc);
  const SyntaxDefs& d = syntax_defs(sc);
  auto at = [&](Expr x, Expr i) { return F(w.idx, {std::move(x), std::move(i)}); };
  auto is = [](const Fn& f, std::vector<Expr> a) { return Rel::atom(F(f, std::move(a))); };
  const Expr s = V("s"), t = V("t"), l = V("l"), i = V("i"), z = V("z"), tv = V("w"), u = V("u"), v = V("v"),
             x = V("x"), y = V("y"), j = V("j"), k = V("k"), p = V("p"), q = V("q"), w1 = V("w1"), w2 = V("w2"),
             r = V("r");
  const Expr si = at(s, i), sj = at(s, j), sk = at(s, k), tl = at(t, l), tp = at(t, p), tq = at(t, q);
  const Rel true_w = Rel::eq(tv, K(1));
  const Expr uv = F("add", {u, v});
  // p_(u+v)^((z^(u+v)+1)^2)
  const Expr zuv1 = F("add", {F("pow", {z, uv}), K(1)});
  const Expr atom_bound = F("pow", {F("prime", {uv}), F("mul", {zuv1, zuv1})});

  auto atomic = [&](const Fn& code, Sym sym, Rel truth) {
    return Rel::exists("u", s,
                       Rel::exists("v", s,
                                   Rel::conj({Rel::eq(si, F(code, {u, v})), is(d.trm, {u}), is(d.trm, {v}),
                                              Rel::iff(true_w, std::move(truth))}),
                                   false, detail::parts_of(sc, sym, si, 1, {{0, u}})),
                       false, detail::parts_of(sc, sym, si, 0));
  };
  const Rel eq_clause =
      atomic(w.eq, Sym::Eq, Rel::exists("x", atom_bound, Rel::conj({is(d.val, {u, z, x}), is(d.val, {v, z, x})}), false,
                               detail::value_of(sc, u, z)));
  const Rel le_clause = atomic(
      w.le, Sym::Le, Rel::exists("x", atom_bound,
                        Rel::exists("y", atom_bound,
                                    Rel::conj({is(d.val, {u, z, x}), is(d.val, {v, z, y}), Rel::le(x, y)}), false,
                                    detail::value_of(sc, v, z)),
                        false, detail::value_of(sc, u, z)));
  const Rel neg_clause = Rel::exists(
      "j", i,
      Rel::conj({Rel::eq(si, F(w.neg, {sj})),
                 Rel::exists("p", l,
                             Rel::exists("w1", K(1),
                                         Rel::conj({Rel::eq(tp, F(w.triple, {j, z, w1})),
                                                    Rel::iff(true_w, Rel::eq(w1, K(0)))})),
                             true, positions(sc, t, j, z))}),
      true);
  const Rel imp_clause = Rel::exists(
      "j", i,
      Rel::exists(
          "k", i,
          Rel::conj(
              {Rel::eq(si, F(w.imp, {sj, sk})),
               Rel::exists(
                   "p", l,
                   Rel::exists("q", l,
                               Rel::exists("w1", K(1),
                                           Rel::exists("w2", K(1),
                                                       Rel::conj({Rel::eq(tp, F(w.triple, {j, z, w1})),
                                                                  Rel::eq(tq, F(w.triple, {k, z, w2})),
                                                                  Rel::iff(true_w, Rel::disj({Rel::eq(w1, K(0)),
                                                                                              Rel::eq(w2, K(1))}))}))),
                               true, positions(sc, t, k, z)),
                   true, positions(sc, t, j, z))}),
          true),
      true);
  // z[r/v] reads the variable's index
  const Expr zr = F(w.replace, {z, r, F(w.var_index, {v})});
  auto covered = [&](Expr truth) {
    return Rel::forall("r", x,
                       Rel::exists("p", l, Rel::exists("w1", K(1), Rel::eq(tp, F(w.triple, {j, zr, std::move(truth)}))),
                                   true, positions(sc, t, j, zr)));
  };
  // the scope of E x extends over the truth-value bracket
  const Rel all_clause = Rel::exists(
      "j", i,
      Rel::exists(
          "u", s,
          Rel::exists("v", s,
                      Rel::conj({Rel::eq(si, F(w.all, {v, u, sj})), is(d.trm, {u}), is(w.var, {v}),
                                 Rel::exists("x", termval_bound(u, z),
                                             Rel::conj({is(d.val, {u, z, x}), covered(w1),
                                                        Rel::iff(true_w, covered(K(1)))}),
                                             false, detail::value_of(sc, u, z))}),
                      true, detail::parts_of(sc, Sym::All, si, 0, {{1, u}, {2, sj}})),
          true, detail::parts_of(sc, Sym::All, si, 1, {{2, sj}})),
      true);

  const Rel element = Rel::conj({Rel::eq(tl, F(w.triple, {i, z, tv})), Rel::lt(i, F(w.len, {s})), Rel::le(tv, K(1)),
                                 Rel::disj({eq_clause, le_clause, neg_clause, imp_clause, all_clause})});
  const Rel each = Rel::exists(
      "i", t,
      Rel::exists("z", t, Rel::exists("w", t, element, false, component(sc, tl, 2)), false, component(sc, tl, 1)),
      false, component(sc, tl, 0));
  return as_fn("satseq", compile(Rel::conj({is(d.fml_seq, {s}), is(w.seq, {t}), Rel::forall("l", F(w.len, {t}), each, true)}),
                                 {"s", "t"}));
}

Compiled make_sat(Scheme sc) {
  const Vocab& w = vocab(sc);
  const Expr x = V("x"), y = V("y"), s = V("s"), t = V("t");
  auto witness = [sc, s, y](const Env& env) -> std::vector<Natural> {
    try {
      return {sat_witness(sc, eval_expr(s, env), eval_expr(y, env)).t};
    } catch (const FeasibilityError&) {
      throw;
    } catch (const Error&) {
      return {};
    }
  };
  const Rel body = Rel::conj({Rel::atom(F(satseq_fn(sc), {s, t})), Rel::eq(F(w.last, {s}), x),
                              Rel::eq(F(w.last, {t}), F(w.triple, {F("monus", {F(w.len, {s}), K(1)}), y, K(1)}))});
  return compile(Rel::exists("s", buildseq_bound(x), Rel::exists("t", sat_t_bound(x, y), body, false, witness), false,
                             detail::buildseq_of(sc, SynPred::Fml, x)),
                 {"x", "y"});
}

Verdict3 run(const PRTerm& term, const HookTable* hooks, std::vector<Natural> args, std::uint64_t budget) {
  EvalOptions o{.kernels = &stdlib_kernels(), .hooks = hooks, .max_steps = budget};
  try {
    return verdict(eval_pr(term, args, o) != 0);
  } catch (const FeasibilityError&) {
    return Verdict3::Unknown;
  }
}

// renames bound occurrences of v to a fresh variable
Formula rename_bound(const Formula& f, VarIndex v, VarIndex fresh) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le: return f;
    case K::Not: return Formula::negation(rename_bound(f.sub(), v, fresh));
    case K::Implies: return Formula::implies(rename_bound(f.first(), v, fresh), rename_bound(f.second(), v, fresh));
    case K::And: return Formula::conj(rename_bound(f.first(), v, fresh), rename_bound(f.second(), v, fresh));
    case K::Or: return Formula::disj(rename_bound(f.first(), v, fresh), rename_bound(f.second(), v, fresh));
    default: break;
  }
  Formula body = rename_bound(f.body(), v, fresh);
  VarIndex var = f.var();
  if (var == v) {
    body = substitute(body, v, Term::var(fresh));
    var = fresh;
  }
  switch (f.kind()) {
    case K::BForall: return Formula::bforall(var, f.bound(), body);
    case K::BExists: return Formula::bexists(var, f.bound(), body);
    case K::UForall: return Formula::uforall(var, body);
    default: return Formula::uexists(var, body);
  }
}

}  // namespace

bool sat_direct(Scheme s, const Natural& x, const Natural& a) {
  const Formula f = decode_formula(s, x);
  return eval_delta0(f, constant_rho(f, a));
}

Verdict3 sat_direct_budgeted(Scheme s, const Natural& x, const Natural& a, std::uint64_t steps) {
  const Formula f = decode_formula(s, x);
  return eval_delta0_budgeted(f, constant_rho(f, a), steps);
}

Natural constant_valuation(Scheme s, const Formula& f, const Natural& a) {
  const auto vars = all_vars(f);
  const std::size_t n = vars.empty() ? 0 : *vars.rbegin() + 1;
  return seq_encode(s, std::vector<Natural>(n, a));
}

SatWitness sat_witness(Scheme sc, const Natural& s, const Natural& y) {
  auto els = seq_decode(sc, s);
  if (!els || els->empty()) throw DecodeError("not a nonempty sequence code", 0);
  WitnessBuilder b(sc, *els);
  SatWitness out;
  out.s = s;
  out.truth = b.gen(els->size() - 1, y);
  out.triples = b.triples();
  std::vector<Natural> codes;
  for (const auto& [i, z, w] : out.triples) codes.push_back(triple(sc, i, z, w));
  out.t = seq_encode(sc, codes);
  return out;
}

SatWitness sat_witness(Scheme sc, const Formula& f, const Natural& y) {
  return sat_witness(sc, seq_encode(sc, canonical_elements(sc, desugar(f))), y);
}

Expr sat_t_bound(const Expr& x, const Expr& y) {
  const Expr px = F("prime", {x});
  const Expr y1 = F("add", {y, K(1)});
  const Expr a = F("pow", {K(2), buildseq_bound(x)});
  const Expr b = F("pow", {K(3), F("pow", {px, F("pow", {px, F("mul", {y1, y1})})})});
  return F("pow", {F("prime", {F("mul", {x, x})}), F("mul", {F("mul", {a, b}), K(5)})});
}

const Fn& satseq_fn(Scheme sc) {
  static const Fn paper = make_satseq(Scheme::Paper);
  static const Fn compact = make_satseq(Scheme::Compact);
  return sc == Scheme::Paper ? paper : compact;
}

const Compiled& sat_as_pr(Scheme sc) {
  static const Compiled paper = make_sat(Scheme::Paper);
  static const Compiled compact = make_sat(Scheme::Compact);
  return sc == Scheme::Paper ? paper : compact;
}

Verdict3 satseq_check(Scheme sc, const Natural& s, const Natural& t, std::uint64_t budget) {
  const Fn& f = satseq_fn(sc);
  return run(f.term, f.hooks.get(), {s, t}, budget);
}

Verdict3 sat_pr(Scheme sc, const Natural& x, const Natural& y, std::uint64_t budget) {
  const Compiled& c = sat_as_pr(sc);
  return run(c.term, &c.hooks, {x, y}, budget);
}

Verdict3 sat_pr_value(Scheme sc, const Natural& x, const Natural& a, std::uint64_t budget) {
  Formula f = Formula::eq(Term::zero(), Term::zero());
  try {
    f = decode_formula(sc, x);
  } catch (const DecodeError&) {
    return Verdict3::False;
  }
  return sat_pr(sc, x, constant_valuation(sc, f, a), budget);
}

Counterexample falsify(const Formula& candidate, Scheme sc, std::uint64_t budget) {
  if (!is_delta0(candidate)) throw Error("candidate is not a Delta0 formula");
  for (VarIndex v : free_vars(candidate))
    if (v > 1) throw Error("candidate has free variable v" + std::to_string(v) + "; only v0 and v1 are allowed");
  Formula c = candidate;
  if (!substitutable(c, 1, Term::var(0))) {
    const auto vars = all_vars(c);
    c = rename_bound(c, 0, *vars.rbegin() + 1);
  }
  Counterexample out{candidate, Formula::negation(substitute(c, 1, Term::var(0))), 0, {}};
  out.m = encode(sc, out.diagonal);
  out.point = {out.m, out.m};
  out.candidate_value = eval_delta0_budgeted(candidate, {{0, out.m}, {1, out.m}}, budget);
  out.sat_value = sat_direct_budgeted(sc, out.m, out.m, budget);
  return out;
}

}  // namespace arith
