#include "arith/syntax_defs.hpp"

#include <algorithm>

#include "defs_impl.hpp"

namespace arith {

using namespace ir;
using detail::add_unique;
using detail::buildseq_of;
using detail::parts_of;

namespace {

Vocab make_vocab(Scheme s) {
  if (s == Scheme::Paper)
    return {lib("seq_test"), lib("len"), lib("idx"), lib("last"), lib("replace"), lib("pair3"), lib("pvar"),
            lib("pvar_index"), lib("p_add"), lib("p_mul"), lib("p_eq"), lib("p_le"), lib("p_not"), lib("p_imp"),
            lib("p_all"), 1, 3};
  return {lib("cseq_test"), lib("clen"), lib("cidx"), lib("clast"), lib("creplace"), lib("ctriple"), lib("cvar"),
          lib("cvar_index"), lib("c_add"), lib("c_mul"), lib("c_eq"), lib("c_le"), lib("c_not"), lib("c_imp"),
          lib("c_all"), 2, 3};
}

SyntaxDefs make_defs(Scheme sc) {
  const Vocab& w = vocab(sc);
  auto at = [&](Expr x, Expr i) { return F(w.idx, {std::move(x), std::move(i)}); };
  auto is = [](const Fn& f, std::vector<Expr> a) { return Rel::atom(F(f, std::move(a))); };
  const Expr x = V("x"), i = V("i"), j = V("j"), k = V("k");
  SyntaxDefs d;

  // trmseq(x)
  {
    const Expr xi = at(x, i), xj = at(x, j), xk = at(x, k);
    const Rel element = Rel::disj({Rel::eq(xi, K(w.zero)), Rel::eq(xi, K(w.one)), is(w.var, {xi}),
                                   Rel::exists("j", i,
                                               Rel::exists("k", i,
                                                           Rel::disj({Rel::eq(xi, F(w.add, {xj, xk})),
                                                                      Rel::eq(xi, F(w.mul, {xj, xk}))}),
                                                           true),
                                               true)});
    d.trmseq = as_fn("trmseq", compile(Rel::conj({is(w.seq, {x}), Rel::forall("i", F(w.len, {x}), element, true)}), {"x"}));
  }
  // trm(x) = (E s <= p_x^((x+1)^2)) (trmseq(s) & last(s) = x)
  const Expr s = V("s");
  d.trm = as_fn("trm", compile(Rel::exists("s", buildseq_bound(x),
                                           Rel::conj({is(d.trmseq, {s}), Rel::eq(F(w.last, {s}), x)}), false,
                                           buildseq_of(sc, SynPred::Trm, x)),
                               {"x"}));
  // atm(x) = (E u, v < x) (trm(u) & trm(v) & (x = (u = v) | x = (u <= v)))
  {
    const Expr u = V("u"), v = V("v");
    const Rel body = Rel::conj({is(d.trm, {u}), is(d.trm, {v}),
                                Rel::disj({Rel::eq(x, F(w.eq, {u, v})), Rel::eq(x, F(w.le, {u, v}))})});
    auto first = [sc, x](const Env& env) {
      auto a = parts_of(sc, Sym::Eq, x, 0)(env);
      for (const auto& c : parts_of(sc, Sym::Le, x, 0)(env)) add_unique(a, c);
      return a;
    };
    auto second = [sc, x, u](const Env& env) {
      auto a = parts_of(sc, Sym::Eq, x, 1, {{0, u}})(env);
      for (const auto& c : parts_of(sc, Sym::Le, x, 1, {{0, u}})(env)) add_unique(a, c);
      return a;
    };
    d.atm = as_fn("atm", compile(Rel::exists("u", x, Rel::exists("v", x, body, true, second), true, first), {"x"}));
  }
  // fml_seq(x)
  {
    const Expr xi = at(x, i), xj = at(x, j), xk = at(x, k), v = V("v"), t = V("t");
    const Rel quant = Rel::exists(
        "v", x,
        Rel::exists("t", x, Rel::conj({is(w.var, {v}), is(d.trm, {t}), Rel::eq(xi, F(w.all, {v, t, xj}))}), true,
                    parts_of(sc, Sym::All, xi, 1, {{0, v}, {2, xj}})),
        true, parts_of(sc, Sym::All, xi, 0, {{2, xj}}));
    const Rel element = Rel::disj(
        {is(d.atm, {xi}),
         Rel::exists("j", i,
                     Rel::exists("k", i,
                                 Rel::disj({Rel::eq(xi, F(w.neg, {xj})), Rel::eq(xi, F(w.imp, {xj, xk})), quant}), true),
                     true)});
    d.fml_seq = as_fn("fml_seq", compile(Rel::conj({is(w.seq, {x}), Rel::forall("i", F(w.len, {x}), element, true)}), {"x"}));
  }
  d.fml = as_fn("fml", compile(Rel::exists("s", buildseq_bound(x),
                                           Rel::conj({is(d.fml_seq, {s}), Rel::eq(F(w.last, {s}), x)}), false,
                                           buildseq_of(sc, SynPred::Fml, x)),
                               {"x"}));
  // valseq(y, s, t); a variable reads [y]_(its index)
  {
    const Expr y = V("y"), t = V("t");
    const Expr si = at(s, i), sj = at(s, j), sk = at(s, k), ti = at(t, i), tj = at(t, j), tk = at(t, k);
    const Rel element = Rel::disj(
        {Rel::conj({Rel::eq(si, K(w.zero)), Rel::eq(ti, K(0))}), Rel::conj({Rel::eq(si, K(w.one)), Rel::eq(ti, K(1))}),
         Rel::conj({is(w.var, {si}), Rel::eq(ti, at(y, F(w.var_index, {si})))}),
         Rel::exists("j", i,
                     Rel::exists("k", i,
                                 Rel::disj({Rel::conj({Rel::eq(si, F(w.add, {sj, sk})), Rel::eq(ti, F("add", {tj, tk}))}),
                                            Rel::conj({Rel::eq(si, F(w.mul, {sj, sk})), Rel::eq(ti, F("mul", {tj, tk}))})}),
                                 true),
                     true)});
    d.valseq = as_fn("valseq",
                     compile(Rel::conj({is(w.seq, {y}), is(d.trmseq, {s}), is(w.seq, {t}),
                                        Rel::eq(F(w.len, {t}), F(w.len, {s})), Rel::forall("i", F(w.len, {s}), element, true)}),
                             {"y", "s", "t"}));
  }
  // val(x, y, z) = (E s <= p_x^((x+1)^2)) (E t <= bound) (valseq(y, s, t) & last(s) = x & last(t) = z)
  {
    const Expr y = V("y"), z = V("z"), t = V("t");
    auto values = [sc, s, y](const Env& env) -> std::vector<Natural> {
      try {
        return {seq_encode(sc, value_elements(sc, eval_expr(s, env), eval_expr(y, env)))};
      } catch (const DecodeError&) {
        return {};
      }
    };
    const Rel body = Rel::conj({is(d.valseq, {y, s, t}), Rel::eq(F(w.last, {s}), x), Rel::eq(F(w.last, {t}), z)});
    d.val = as_fn("val", compile(Rel::exists("s", buildseq_bound(x), Rel::exists("t", valseq_bound(x, y), body, false, values),
                                             false, buildseq_of(sc, SynPred::Trm, x)),
                                 {"x", "y", "z"}));
  }
  return d;
}

}  // namespace

namespace detail {

void add_unique(std::vector<Natural>& v, const Natural& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

// candidate parts of c split under the given symbol; `fixed` pins earlier parts
Provider parts_of(Scheme sc, Sym op, Expr code, std::size_t part, std::vector<std::pair<std::size_t, Expr>> fixed) {
  return [=](const Env& env) {
    std::vector<Natural> out;
    const Natural c = eval_expr(code, env);
    std::vector<std::pair<std::size_t, Natural>> pins;
    for (const auto& [k, e] : fixed) pins.emplace_back(k, eval_expr(e, env));
    for (const auto& sp : splits(sc, c)) {
      if (sp.op != op) continue;
      bool ok = true;
      for (const auto& [k, v] : pins) ok = ok && sp.parts[k] == v;
      if (ok) add_unique(out, sp.parts[part]);
    }
    return out;
  };
}

Provider buildseq_of(Scheme sc, SynPred kind, Expr code) {
  return [=](const Env& env) -> std::vector<Natural> {
    auto els = greedy_elements(sc, kind, eval_expr(code, env));
    if (els.empty()) return {};
    return {seq_encode(sc, els)};
  };
}

Provider value_of(Scheme sc, Expr code, Expr y) {
  return [=](const Env& env) -> std::vector<Natural> {
    try {
      const Term term = decode_term(sc, eval_expr(code, env));
      auto ys = seq_decode(sc, eval_expr(y, env));
      if (!ys) return {};
      Valuation rho;
      for (VarIndex v : free_vars(term)) rho[v] = v < ys->size() ? (*ys)[v] : Natural(0);
      return {eval_term(term, rho)};
    } catch (const DecodeError&) {
      return {};
    }
  };
}

}  // namespace detail

const Vocab& vocab(Scheme s) {
  static const Vocab paper = make_vocab(Scheme::Paper);
  static const Vocab compact = make_vocab(Scheme::Compact);
  return s == Scheme::Paper ? paper : compact;
}

Expr buildseq_bound(const Expr& x) {
  const Expr x1 = F("add", {x, K(1)});
  return F("pow", {F("prime", {x}), F("mul", {x1, x1})});
}

Expr termval_bound(const Expr& u, const Expr& z) {
  return F("pow", {F("prime", {u}), F("add", {F("pow", {z, u}), K(1)})});
}

Expr valseq_bound(const Expr& x, const Expr& y) {
  return F("pow", {F("prime", {x}), F("mul", {x, F("add", {termval_bound(x, y), K(1)})})});
}

const SyntaxDefs& syntax_defs(Scheme s) {
  static const SyntaxDefs paper = make_defs(Scheme::Paper);
  static const SyntaxDefs compact = make_defs(Scheme::Compact);
  return s == Scheme::Paper ? paper : compact;
}

SeqPred parse_seqpred(std::string_view s) {
  for (SeqPred p : {SeqPred::TrmSeq, SeqPred::Trm, SeqPred::Atm, SeqPred::FmlSeq, SeqPred::Fml, SeqPred::ValSeq,
                    SeqPred::Val})
    if (to_string(p) == s) return p;
  if (s == "fml_seq") return SeqPred::FmlSeq;
  throw Error("unknown definition '" + std::string(s) + "'");
}

std::string to_string(SeqPred p) {
  switch (p) {
    case SeqPred::TrmSeq: return "trmseq";
    case SeqPred::Trm: return "trm";
    case SeqPred::Atm: return "atm";
    case SeqPred::FmlSeq: return "fml_delta0_seq";
    case SeqPred::Fml: return "fml_delta0";
    case SeqPred::ValSeq: return "valseq";
    case SeqPred::Val: return "val";
  }
  return {};
}

unsigned arity(SeqPred p) { return p == SeqPred::ValSeq || p == SeqPred::Val ? 3 : 1; }

Verdict3 seqdef(Scheme s, SeqPred p, std::span<const Natural> args, std::uint64_t budget) {
  const SyntaxDefs& d = syntax_defs(s);
  const Fn* f = nullptr;
  switch (p) {
    case SeqPred::TrmSeq: f = &d.trmseq; break;
    case SeqPred::Trm: f = &d.trm; break;
    case SeqPred::Atm: f = &d.atm; break;
    case SeqPred::FmlSeq: f = &d.fml_seq; break;
    case SeqPred::Fml: f = &d.fml; break;
    case SeqPred::ValSeq: f = &d.valseq; break;
    case SeqPred::Val: f = &d.val; break;
  }
  if (args.size() != arity(p))
    throw ArityError(to_string(p) + " takes " + std::to_string(arity(p)) + " arguments");
  EvalOptions o{.kernels = &stdlib_kernels(), .hooks = f->hooks.get(), .max_steps = budget};
  try {
    return verdict(eval_pr(f->term, args, o) != 0);
  } catch (const FeasibilityError&) {
    return Verdict3::Unknown;
  }
}

Valuation valuation_of(Scheme s, const Natural& y) {
  auto ys = seq_decode(s, y);
  if (!ys) throw Error("valuation " + to_string(y) + " is not a sequence code");
  Valuation rho;
  for (std::size_t i = 0; i < ys->size(); ++i) rho[static_cast<VarIndex>(i)] = (*ys)[i];
  return rho;
}

Natural val_native(Scheme s, const Natural& t, const Natural& y) {
  const Term term = decode_term(s, t);
  const Valuation rho = valuation_of(s, y);
  for (VarIndex v : free_vars(term))
    if (!rho.count(v)) throw Error("valuation too short: no value for v" + std::to_string(v));
  return eval_term(term, rho);
}

std::vector<Natural> value_elements(Scheme s, const Natural& seq, const Natural& y) {
  auto els = seq_decode(s, seq);
  auto ys = seq_decode(s, y);
  if (!els || !ys) throw DecodeError("not a sequence code", 0);
  std::vector<Natural> out;
  for (const auto& e : *els) {
    const Term term = decode_term(s, e);
    Valuation rho;
    for (VarIndex v : free_vars(term)) rho[v] = v < ys->size() ? (*ys)[v] : Natural(0);
    out.push_back(eval_term(term, rho));
  }
  return out;
}

}  // namespace arith
