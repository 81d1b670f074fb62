#include "arith/qkernel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "arith/represent.hpp"
#include "bytes.hpp"

namespace arith {

namespace {

using K = Formula::Kind;

Term v(VarIndex i) { return Term::var(i); }
Term plus(Term a, Term b) { return Term::add(std::move(a), std::move(b)); }
Term succ(Term a) { return Term::add(std::move(a), Term::one()); }
Term num(std::uint64_t n) { return numeral(n); }
const Term kZero = Term::zero();

// y of the schemas, the Q3 witness, the Q8 witness, and the hole of EQSUBST shapes
constexpr VarIndex kY = 0, kW = 3, kZ = 4, kH = 90;

// ---- propositional tautologies ----

// Tseitin clauses for the negation, then DPLL with unit propagation.
class Tautology {
public:
  explicit Tautology(const Formula& f) { root_ = lit(f); }

  bool holds() {
    std::vector<signed char> val(vars_ + 1, 0);
    clauses_.push_back({-root_});
    return !sat(val);
  }

private:
  int lit(const Formula& f) {
    switch (f.kind()) {
      case K::Not: return -lit(f.sub());
      case K::Implies:
      case K::And:
      case K::Or: {
        const int a = lit(f.first()), b = lit(f.second());
        auto key = std::make_tuple(static_cast<int>(f.kind()), a, b);
        if (auto it = nodes_.find(key); it != nodes_.end()) return it->second;
        const int x = ++vars_;
        nodes_.emplace(key, x);
        if (f.kind() == K::And) {
          clauses_.push_back({-x, a});
          clauses_.push_back({-x, b});
          clauses_.push_back({x, -a, -b});
        } else {
          const int l = f.kind() == K::Implies ? -a : a;
          clauses_.push_back({-x, l, b});
          clauses_.push_back({x, -l});
          clauses_.push_back({x, -b});
        }
        return x;
      }
      default: {
        auto [it, fresh] = atoms_.emplace(print(f), vars_ + 1);
        if (fresh) ++vars_;
        return it->second;
      }
    }
  }

  static int value(const std::vector<signed char>& val, int l) { return l > 0 ? val[l] : -val[-l]; }

  bool sat(std::vector<signed char>& val) {
    if (++decisions_ > 100000) throw FeasibilityError("tautology check too large");
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : clauses_) {
        int open = 0, last = 0;
        bool done = false;
        for (int l : c) {
          const int x = value(val, l);
          if (x > 0) { done = true; break; }
          if (x == 0) { ++open; last = l; }
        }
        if (done) continue;
        if (open == 0) return false;
        if (open == 1) {
          val[std::abs(last)] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
    }
    int pick = 0;
    for (const auto& c : clauses_) {
      bool done = false;
      int cand = 0;
      for (int l : c) {
        const int x = value(val, l);
        if (x > 0) { done = true; break; }
        if (x == 0 && !cand) cand = std::abs(l);
      }
      if (!done && cand) { pick = cand; break; }
    }
    if (!pick) return true;
    for (signed char s : {1, -1}) {
      auto next = val;
      next[pick] = s;
      if (sat(next)) return true;
    }
    return false;
  }

  std::map<std::string, int> atoms_;
  std::map<std::tuple<int, int, int>, int> nodes_;
  std::vector<std::vector<int>> clauses_;
  int vars_ = 0, root_ = 0;
  std::size_t decisions_ = 0;
};

bool is_iff(const Formula& f, Formula* l, Formula* r) {
  if (f.kind() != K::And || f.first().kind() != K::Implies || f.second().kind() != K::Implies) return false;
  const Formula &a = f.first(), &b = f.second();
  if (!(a.first() == b.second() && a.second() == b.first())) return false;
  *l = a.first();
  *r = a.second();
  return true;
}

bool subst_is(const Formula& shape, VarIndex x, const Term& t, const Formula& expect) {
  try {
    return substitute(shape, x, t) == expect;
  } catch (const Error&) {
    return false;
  }
}

// empty when the node is a correct instance of its rule
std::string node_error(const QProof& p) {
  const Formula& c = p.conclusion;
  auto need_children = [&](std::size_t n) -> std::string {
    if (p.children.size() != n)
      return "expected " + std::to_string(n) + " premises, found " + std::to_string(p.children.size());
    return {};
  };
  if (auto e = need_children(p.rule == QRule::MP ? 2 : (p.rule == QRule::GEN || p.rule == QRule::EXELIM) ? 1 : 0); !e.empty())
    return e;
  const bool takes_term = p.rule == QRule::INST || p.rule == QRule::EXINTRO;
  if (takes_term != p.term.has_value()) return takes_term ? "missing term" : "unexpected term";
  if ((p.rule == QRule::EQSUBST) != p.shape.has_value()) return p.shape ? "unexpected shape" : "missing shape";
  switch (p.rule) {
    case QRule::AX:
      if (p.axiom < 1 || p.axiom > kQAxioms) return "no axiom Q" + std::to_string(p.axiom);
      return c == q_axiom(p.axiom) ? "" : "not axiom Q" + std::to_string(p.axiom);
    case QRule::TAUT:
      try {
        return Tautology(c).holds() ? "" : "not a tautology";
      } catch (const FeasibilityError& e) {
        return e.what();
      }
    case QRule::INST:
      if (c.kind() != K::Implies || c.first().kind() != K::UForall) return "not of the form (A x)p -> q";
      return subst_is(c.first().body(), c.first().var(), *p.term, c.second()) ? "" : "consequent is not the instance";
    case QRule::EXINTRO:
      if (c.kind() != K::Implies || c.second().kind() != K::UExists) return "not of the form q -> (E x)p";
      return subst_is(c.second().body(), c.second().var(), *p.term, c.first()) ? "" : "antecedent is not the instance";
    case QRule::DIST: {
      if (c.kind() != K::Implies || c.first().kind() != K::UForall || c.second().kind() != K::Implies) return "bad shape";
      const Formula &a = c.first(), &r = c.second();
      if (a.body().kind() != K::Implies || r.first().kind() != K::UForall || r.second().kind() != K::UForall) return "bad shape";
      const VarIndex x = a.var();
      if (r.first().var() != x || r.second().var() != x) return "variables differ";
      return a.body().first() == r.first().body() && a.body().second() == r.second().body() ? "" : "bodies differ";
    }
    case QRule::VACUOUS:
      if (c.kind() != K::Implies || c.second().kind() != K::UForall || !(c.second().body() == c.first())) return "bad shape";
      return free_vars(c.first()).count(c.second().var()) ? "variable is free" : "";
    case QRule::BDEF: {
      Formula l = c, r = c;
      if (!is_iff(c, &l, &r)) return "not a biconditional";
      if (l.kind() == K::BForall) {
        const Formula want = Formula::uforall(l.var(), Formula::implies(Formula::le(v(l.var()), l.bound()), l.body()));
        return r == want ? "" : "right side is not the unbounded form";
      }
      if (l.kind() == K::BExists) {
        const Formula want = Formula::uexists(l.var(), Formula::conj(Formula::le(v(l.var()), l.bound()), l.body()));
        return r == want ? "" : "right side is not the unbounded form";
      }
      return "left side is not a bounded quantifier";
    }
    case QRule::REFL:
      return c.kind() == K::Eq && c.lhs() == c.rhs() ? "" : "not t = t";
    case QRule::EQSUBST:
      if (c.kind() != K::Implies || c.first().kind() != K::Eq || c.second().kind() != K::Implies) return "bad shape";
      if (!subst_is(*p.shape, p.var, c.first().lhs(), c.second().first())) return "antecedent is not shape[s]";
      return subst_is(*p.shape, p.var, c.first().rhs(), c.second().second()) ? "" : "consequent is not shape[t]";
    case QRule::MP: {
      const Formula& ab = p.children[1].conclusion;
      if (ab.kind() != K::Implies) return "second premise is not an implication";
      if (!(ab.first() == p.children[0].conclusion)) return "antecedent does not match first premise";
      return ab.second() == c ? "" : "conclusion is not the consequent";
    }
    case QRule::GEN:
      return c.kind() == K::UForall && c.body() == p.children[0].conclusion ? "" : "not the generalization of the premise";
    case QRule::EXELIM: {
      const Formula& a = p.children[0].conclusion;
      if (a.kind() != K::UForall || a.body().kind() != K::Implies) return "premise is not (A x)(p -> q)";
      const VarIndex x = a.var();
      if (free_vars(a.body().second()).count(x)) return "variable free in the consequent";
      const Formula want = Formula::implies(Formula::uexists(x, a.body().first()), a.body().second());
      return c == want ? "" : "conclusion is not (E x)p -> q";
    }
  }
  return "unknown rule";
}

bool check_at(const QProof& p, std::vector<std::size_t>& path, QCheck& out) {
  if (auto e = node_error(p); !e.empty()) {
    out = {false, path, to_string(p.rule) + ": " + e};
    return false;
  }
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    path.push_back(i);
    if (!check_at(p.children[i], path, out)) return false;
    path.pop_back();
  }
  return true;
}

// ---- serialization ----

void write(const QProof& p, std::string& out) {
  out += "(" + to_string(p.rule) + " {" + print(p.conclusion) + "}";
  if (p.rule == QRule::AX) out += " [Q" + std::to_string(p.axiom) + "]";
  if (p.term) out += " [" + print(*p.term) + "]";
  if (p.shape) out += " [v" + std::to_string(p.var) + "] [" + print(*p.shape) + "]";
  for (const auto& c : p.children) {
    out += " ";
    write(c, out);
  }
  out += ")";
}

class Reader {
public:
  explicit Reader(const std::string& s) : s_(s) {}

  QProof proof() {
    expect('(');
    std::size_t b = i_;
    while (i_ < s_.size() && std::isupper(static_cast<unsigned char>(s_[i_]))) ++i_;
    const QRule rule = parse_qrule(s_.substr(b, i_ - b));
    skip();
    QProof p{rule, parse_formula(delimited('{', '}'))};
    skip();
    if (rule == QRule::AX) {
      const std::string a = delimited('[', ']');
      if (a.size() < 2 || a[0] != 'Q') fail("expected [Qi]");
      p.axiom = static_cast<int>(to_u64(parse_natural(a.substr(1))));
      skip();
    } else if (rule == QRule::INST || rule == QRule::EXINTRO) {
      p.term = parse_term(delimited('[', ']'));
      skip();
    } else if (rule == QRule::EQSUBST) {
      const std::string x = delimited('[', ']');
      if (x.size() < 2 || x[0] != 'v') fail("expected [vK]");
      p.var = static_cast<VarIndex>(to_u64(parse_natural(x.substr(1))));
      skip();
      p.shape = parse_formula(delimited('[', ']'));
      skip();
    }
    while (peek() == '(') {
      p.children.push_back(proof());
      skip();
    }
    expect(')');
    return p;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail("trailing text");
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("proof text: " + what + " at offset " + std::to_string(i_));
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string delimited(char open, char close) {
    expect(open);
    const auto end = s_.find(close, i_);
    if (end == std::string::npos) fail(std::string("unterminated '") + open + "'");
    std::string r = s_.substr(i_, end - i_);
    i_ = end + 1;
    return r;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

// ---- proof builders ----

using P = QProof;

P leaf(QRule r, Formula c) { return P{r, std::move(c)}; }

P ax(int i) {
  P p = leaf(QRule::AX, q_axiom(i));
  p.axiom = i;
  return p;
}

P mp(P a, P ab) {
  const Formula& f = ab.conclusion;
  if (f.kind() != K::Implies || !(f.first() == a.conclusion))
    throw Error("internal: modus ponens mismatch on " + print(f));
  P p = leaf(QRule::MP, f.second());
  p.children.push_back(std::move(a));
  p.children.push_back(std::move(ab));
  return p;
}

P gen(P a, VarIndex x) {
  P p = leaf(QRule::GEN, Formula::uforall(x, a.conclusion));
  p.children.push_back(std::move(a));
  return p;
}

P exelim(P a) {
  const Formula& f = a.conclusion;
  P p = leaf(QRule::EXELIM, Formula::implies(Formula::uexists(f.var(), f.body().first()), f.body().second()));
  p.children.push_back(std::move(a));
  return p;
}

// premises, then a tautology P1 -> (P2 -> ... -> target)
P combine(std::vector<P> prems, const Formula& target) {
  Formula f = target;
  for (auto it = prems.rbegin(); it != prems.rend(); ++it) f = Formula::implies(it->conclusion, f);
  P p = leaf(QRule::TAUT, f);
  for (auto& q : prems) p = mp(std::move(q), std::move(p));
  return p;
}

P inst(P all, const Term& t) {
  const Formula& f = all.conclusion;
  P l = leaf(QRule::INST, Formula::implies(f, substitute(f.body(), f.var(), t)));
  l.term = t;
  return mp(std::move(all), std::move(l));
}

P inst(P all, const Term& a, const Term& b) { return inst(inst(std::move(all), a), b); }

P exintro(VarIndex x, const Formula& body, const Term& t) {
  P l = leaf(QRule::EXINTRO, Formula::implies(substitute(body, x, t), Formula::uexists(x, body)));
  l.term = t;
  return l;
}

P refl(const Term& t) { return leaf(QRule::REFL, Formula::eq(t, t)); }

P eqsubst(const Term& s, const Term& t, const Formula& shape) {
  P l = leaf(QRule::EQSUBST, Formula::implies(Formula::eq(s, t),
                                              Formula::implies(substitute(shape, kH, s), substitute(shape, kH, t))));
  l.var = kH;
  l.shape = shape;
  return l;
}

P sym_imp(const Term& s, const Term& t) {
  return combine({eqsubst(s, t, Formula::eq(v(kH), s)), refl(s)}, Formula::implies(Formula::eq(s, t), Formula::eq(t, s)));
}

P sym(P st) {
  const Term s = st.conclusion.lhs(), t = st.conclusion.rhs();
  return mp(refl(s), mp(std::move(st), eqsubst(s, t, Formula::eq(v(kH), s))));
}

P trans(P ab, P bc) {
  const Term a = ab.conclusion.lhs(), b = bc.conclusion.lhs(), c = bc.conclusion.rhs();
  return mp(std::move(ab), mp(std::move(bc), eqsubst(b, c, Formula::eq(a, v(kH)))));
}

// s = t gives ctx[s] = ctx[t], ctx with hole kH
P cong(P st, const Term& ctx) {
  const Term s = st.conclusion.lhs(), t = st.conclusion.rhs();
  const Term cs = substitute(ctx, kH, s);
  return mp(refl(cs), mp(std::move(st), eqsubst(s, t, Formula::eq(cs, ctx))));
}

// s = t and shape[s] give shape[t]
P rewrite(P st, const Formula& shape, P at_s) {
  const Term s = st.conclusion.lhs(), t = st.conclusion.rhs();
  return mp(std::move(at_s), mp(std::move(st), eqsubst(s, t, shape)));
}

// (E x)body -> (E u)body[u/x]
P rename_ex(VarIndex x, VarIndex u, const Formula& body) {
  P l = leaf(QRule::EXINTRO, Formula::implies(body, Formula::uexists(u, substitute(body, x, v(u)))));
  l.term = v(x);
  return exelim(gen(std::move(l), x));
}

// k + 1 = (k+1)
P succ_eq(std::uint64_t k) {
  if (k == 0) return sym(ax(9));
  return refl(num(k + 1));
}

// a + b = (a+b)
P add(std::uint64_t a, std::uint64_t b) {
  if (b == 0) return inst(ax(4), num(a));
  if (b == 1) return succ_eq(a);
  P q5 = inst(ax(5), num(a), num(b - 1));
  return trans(std::move(q5), cong(add(a, b - 1), succ(v(kH))));
}

// z + (a+b) = (z + a) + b
P assoc(const Term& z, std::uint64_t a, std::uint64_t b) {
  const Term za = plus(z, num(a));
  if (b == 0) return sym(inst(ax(4), za));
  const std::uint64_t c = a + b - 1;
  P e = cong(sym(succ_eq(c)), plus(z, v(kH)));
  e = trans(std::move(e), inst(ax(5), z, num(c)));
  e = trans(std::move(e), cong(assoc(z, a, b - 1), succ(v(kH))));
  e = trans(std::move(e), sym(inst(ax(5), za, num(b - 1))));
  return trans(std::move(e), cong(succ_eq(b - 1), plus(za, v(kH))));
}

Formula ex_body(const Term& x, const Term& y) { return Formula::eq(plus(v(2), x), y); }

P ex_from_le(const Term& x, const Term& y) {
  return combine({inst(ax(8), x, y)}, Formula::implies(Formula::le(x, y), Formula::uexists(2, ex_body(x, y))));
}

P le_from_ex(const Term& x, const Term& y) {
  return combine({inst(ax(8), x, y)}, Formula::implies(Formula::uexists(2, ex_body(x, y)), Formula::le(x, y)));
}

// x1 <= y1 -> x2 <= y2 from imp: (z + x1 = y1) -> (witness + x2 = y2)
P le_transfer(const Term& x1, const Term& y1, const Term& x2, const Term& y2, const Term& witness, P imp) {
  const Formula body2 = ex_body(x2, y2);
  P step = combine({std::move(imp), exintro(2, body2, witness)},
                   Formula::implies(Formula::eq(plus(v(kZ), x1), y1), Formula::uexists(2, body2)));
  return combine({ex_from_le(x1, y1), rename_ex(2, kZ, ex_body(x1, y1)), exelim(gen(std::move(step), kZ)), le_from_ex(x2, y2)},
                 Formula::implies(Formula::le(x1, y1), Formula::le(x2, y2)));
}

Formula disj_upto(std::uint64_t n, const Term& y) {
  Formula f = Formula::eq(y, num(0));
  for (std::uint64_t i = 1; i <= n; ++i) f = Formula::disj(f, Formula::eq(y, num(i)));
  return f;
}

Formula dich(std::uint64_t n, const Term& y) {
  return Formula::disj(Formula::le(y, num(n)), Formula::le(num(n), y));
}

P neq_lt(std::uint64_t i, std::uint64_t j) {
  if (i == 0) {
    P r = rewrite(succ_eq(j - 1), Formula::negation(Formula::eq(v(kH), kZero)), inst(ax(1), num(j - 1)));
    return combine({sym_imp(kZero, num(j)), std::move(r)}, Formula::negation(Formula::eq(kZero, num(j))));
  }
  const Term a = succ(num(i - 1)), b = succ(num(j - 1));
  P s = combine({inst(ax(2), num(i - 1), num(j - 1)), neq_lt(i - 1, j - 1)}, Formula::negation(Formula::eq(a, b)));
  s = rewrite(succ_eq(i - 1), Formula::negation(Formula::eq(v(kH), b)), std::move(s));
  return rewrite(succ_eq(j - 1), Formula::negation(Formula::eq(num(i), v(kH))), std::move(s));
}

P neq(std::uint64_t i, std::uint64_t j) {
  if (i < j) return neq_lt(i, j);
  return combine({sym_imp(num(i), num(j)), neq_lt(j, i)}, Formula::negation(Formula::eq(num(i), num(j))));
}

P le_nm(std::uint64_t n, std::uint64_t m) {
  P e = mp(add(m - n, n), exintro(2, ex_body(num(n), num(m)), num(m - n)));
  return mp(std::move(e), le_from_ex(num(n), num(m)));
}

// Q3 case split on y = v0: from y = 0 -> goal and (y = w + 1) -> goal
P cases(P zero_case, P succ_case, const Formula& goal) {
  const Term y = v(kY);
  return combine({std::move(zero_case), inst(ax(3), y), rename_ex(1, kW, Formula::eq(y, succ(v(1)))), exelim(gen(std::move(succ_case), kW))},
                 goal);
}

// w <= k -> w + 1 <= k+1
P le_succ(const Term& w, std::uint64_t k) {
  const Term z = v(kZ), K = num(k), K1 = num(k + 1);
  P imp = combine({inst(ax(5), z, w), eqsubst(plus(z, w), K, Formula::eq(plus(z, succ(w)), succ(v(kH)))),
                   eqsubst(succ(K), K1, Formula::eq(plus(z, succ(w)), v(kH))), succ_eq(k)},
                  Formula::implies(Formula::eq(plus(z, w), K), Formula::eq(plus(z, succ(w)), K1)));
  return le_transfer(w, K, succ(w), K1, z, std::move(imp));
}

// k <= w -> k+1 <= w + 1
P le_succ2(const Term& w, std::uint64_t k) {
  const Term z = v(kZ), K = num(k), K1 = num(k + 1), zk1 = succ(plus(z, K));
  P t12 = trans(cong(sym(succ_eq(k)), plus(z, v(kH))), inst(ax(5), z, K));
  P imp = combine({std::move(t12), eqsubst(plus(z, K), w, Formula::eq(zk1, succ(v(kH)))), refl(zk1),
                   eqsubst(zk1, succ(w), Formula::eq(plus(z, K1), v(kH)))},
                  Formula::implies(Formula::eq(plus(z, K), w), Formula::eq(plus(z, K1), succ(w))));
  return le_transfer(K, w, K1, succ(w), z, std::move(imp));
}

// y <= n | n <= y, open in y = v0
P dichotomy(std::uint64_t n) {
  const Term y = v(kY), w = v(kW), N = num(n);
  if (n == 0) {
    P z = mp(mp(inst(ax(4), y), exintro(2, ex_body(kZero, y), y)), le_from_ex(kZero, y));
    return combine({std::move(z)}, dich(0, y));
  }
  P c0 = combine({sym_imp(y, kZero), eqsubst(kZero, y, Formula::le(v(kH), N)), le_nm(0, n)},
                 Formula::implies(Formula::eq(y, kZero), dich(n, y)));
  P ih = inst(gen(dichotomy(n - 1), kY), w);
  P cw = combine({std::move(ih), le_succ(w, n - 1), le_succ2(w, n - 1), eqsubst(succ(w), y, dich(n, v(kH))), sym_imp(y, succ(w))},
                 Formula::implies(Formula::eq(y, succ(w)), dich(n, y)));
  return cases(std::move(c0), std::move(cw), dich(n, y));
}

// y <= n -> y = 0 | ... | y = n
P le_forward(std::uint64_t n) {
  const Term y = v(kY), w = v(kW), z = v(kZ), N = num(n);
  const Formula goal = Formula::implies(Formula::le(y, N), disj_upto(n, y));
  if (n == 0) {
    P q5 = inst(ax(5), z, w);
    P nz = rewrite(sym(std::move(q5)), Formula::negation(Formula::eq(v(kH), kZero)), inst(ax(1), plus(z, w)));
    P cw = combine({sym_imp(y, succ(w)), eqsubst(succ(w), y, Formula::negation(Formula::eq(plus(z, v(kH)), kZero))), std::move(nz)},
                   Formula::implies(Formula::eq(y, succ(w)), Formula::negation(Formula::eq(plus(z, y), kZero))));
    const Formula zy0 = Formula::eq(plus(z, y), kZero);
    P cz = combine({inst(ax(3), y), rename_ex(1, kW, Formula::eq(y, succ(v(1)))), exelim(gen(std::move(cw), kW))},
                   Formula::implies(zy0, Formula::eq(y, kZero)));
    return combine({ex_from_le(y, kZero), rename_ex(2, kZ, ex_body(y, kZero)), exelim(gen(std::move(cz), kZ))}, goal);
  }
  const Term M = num(n - 1);
  P a1 = mp(inst(ax(5), z, w), eqsubst(plus(z, succ(w)), succ(plus(z, w)), Formula::eq(v(kH), N)));
  P a2 = mp(sym(succ_eq(n - 1)), eqsubst(N, succ(M), Formula::eq(succ(plus(z, w)), v(kH))));
  P imp = combine({std::move(a1), std::move(a2), inst(ax(2), plus(z, w), M)},
                  Formula::implies(Formula::eq(plus(z, succ(w)), N), Formula::eq(plus(z, w), M)));
  std::vector<P> prem;
  prem.push_back(inst(gen(le_forward(n - 1), kY), w));
  prem.push_back(le_transfer(succ(w), N, w, M, z, std::move(imp)));
  prem.push_back(eqsubst(y, succ(w), Formula::le(v(kH), N)));
  for (std::uint64_t i = 0; i < n; ++i) {
    prem.push_back(eqsubst(w, num(i), Formula::eq(y, succ(v(kH)))));
    prem.push_back(mp(succ_eq(i), eqsubst(succ(num(i)), num(i + 1), Formula::eq(y, v(kH)))));
  }
  P cw = combine(std::move(prem), Formula::implies(Formula::eq(y, succ(w)), goal));
  return cases(combine({}, Formula::implies(Formula::eq(y, kZero), goal)), std::move(cw), goal);
}

// y = 0 | ... | y = n -> y <= m
P le_backward(std::uint64_t n, std::uint64_t m) {
  const Term y = v(kY), M = num(m);
  std::vector<P> prem;
  for (std::uint64_t i = 0; i <= n; ++i) {
    prem.push_back(sym_imp(y, num(i)));
    prem.push_back(eqsubst(num(i), y, Formula::le(v(kH), M)));
    prem.push_back(le_nm(i, m));
  }
  return combine(std::move(prem), Formula::implies(disj_upto(n, y), Formula::le(y, M)));
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

Formula q_axiom(int i) {
  const Term x = v(0), y = v(1), z = v(2), one = Term::one();
  using F = Formula;
  switch (i) {
    case 1: return F::uforall(0, F::negation(F::eq(succ(x), kZero)));
    case 2: return F::uforall(0, F::uforall(1, F::implies(F::eq(succ(x), succ(y)), F::eq(x, y))));
    case 3: return F::uforall(0, F::implies(F::negation(F::eq(x, kZero)), F::uexists(1, F::eq(x, succ(y)))));
    case 4: return F::uforall(0, F::eq(plus(x, kZero), x));
    case 5: return F::uforall(0, F::uforall(1, F::eq(plus(x, succ(y)), succ(plus(x, y)))));
    case 6: return F::uforall(0, F::eq(Term::mul(x, kZero), kZero));
    case 7: return F::uforall(0, F::uforall(1, F::eq(Term::mul(x, succ(y)), plus(Term::mul(x, y), x))));
    case 8: return F::uforall(0, F::uforall(1, iff(F::le(x, y), F::uexists(2, F::eq(plus(z, x), y)))));
    case 9: return F::eq(one, plus(kZero, one));
  }
  throw Error("no axiom Q" + std::to_string(i));
}

std::string to_string(QRule r) {
  switch (r) {
    case QRule::AX: return "AX";
    case QRule::TAUT: return "TAUT";
    case QRule::INST: return "INST";
    case QRule::EXINTRO: return "EXINTRO";
    case QRule::DIST: return "DIST";
    case QRule::VACUOUS: return "VACUOUS";
    case QRule::BDEF: return "BDEF";
    case QRule::REFL: return "REFL";
    case QRule::EQSUBST: return "EQSUBST";
    case QRule::MP: return "MP";
    case QRule::GEN: return "GEN";
    case QRule::EXELIM: return "EXELIM";
  }
  return {};
}

QRule parse_qrule(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(QRule::EXELIM); ++i)
    if (to_string(static_cast<QRule>(i)) == s) return static_cast<QRule>(i);
  throw Error("unknown rule '" + std::string(s) + "'");
}

QCheck check_proof(const QProof& p) {
  QCheck out;
  std::vector<std::size_t> path;
  check_at(p, path, out);
  return out;
}

std::size_t proof_size(const QProof& p) {
  std::size_t n = 1;
  for (const auto& c : p.children) n += proof_size(c);
  return n;
}

std::string serialize(const QProof& p) {
  std::string out;
  write(p, out);
  return out;
}

QProof deserialize(const std::string& text) {
  Reader r(text);
  QProof p = r.proof();
  r.finish();
  return p;
}

Natural proof_code(const QProof& p) {
  const std::string s = serialize(p);
  return detail::from_bytes(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

QProof proof_decode(const Natural& k) {
  if (bit_length(k) > kMaxMaterializedBits) throw FeasibilityError("proof code too large");
  const auto b = detail::to_bytes(k);
  try {
    return deserialize(std::string(b.begin(), b.end()));
  } catch (const Error& e) {
    throw Error(to_string(k).size() > 40 ? std::string("not a proof code: ") + e.what()
                                         : "not a proof code " + to_string(k) + ": " + e.what());
  }
}

std::string to_string(QSchema s) {
  switch (s) {
    case QSchema::NEQ: return "NEQ";
    case QSchema::LE: return "LE";
    case QSchema::LE_MONO: return "LE_MONO";
    case QSchema::DICHOTOMY: return "DICHOTOMY";
    case QSchema::LE_DISJ: return "LE_DISJ";
    case QSchema::TRICHOT_LT: return "TRICHOT_LT";
    case QSchema::NOT_LT_ZERO: return "NOT_LT_ZERO";
    case QSchema::LT_SUCC_DISJ: return "LT_SUCC_DISJ";
  }
  return {};
}

QSchema parse_qschema(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(QSchema::LT_SUCC_DISJ); ++i)
    if (to_string(static_cast<QSchema>(i)) == s) return static_cast<QSchema>(i);
  throw Error("unknown schema '" + std::string(s) + "'");
}

std::size_t schema_arity(QSchema s) {
  switch (s) {
    case QSchema::NEQ:
    case QSchema::LE:
    case QSchema::LE_MONO: return 2;
    case QSchema::NOT_LT_ZERO: return 0;
    default: return 1;
  }
}

Formula schema_formula(QSchema s, const std::vector<std::uint64_t>& ps) {
  need(ps.size() == schema_arity(s),
       to_string(s) + " takes " + std::to_string(schema_arity(s)) + " parameters, got " + std::to_string(ps.size()));
  const Term y = v(kY);
  using F = Formula;
  switch (s) {
    case QSchema::NEQ:
      need(ps[0] != ps[1], "NEQ needs distinct parameters");
      return F::negation(F::eq(num(ps[0]), num(ps[1])));
    case QSchema::LE:
      need(ps[0] <= ps[1], "LE needs n <= m");
      return F::le(num(ps[0]), num(ps[1]));
    case QSchema::LE_MONO:
      need(ps[0] <= ps[1], "LE_MONO needs n <= m");
      return F::uforall(kY, F::implies(F::le(num(ps[1]), y), F::le(num(ps[0]), y)));
    case QSchema::DICHOTOMY: return F::uforall(kY, dich(ps[0], y));
    case QSchema::LE_DISJ: return F::uforall(kY, iff(F::le(y, num(ps[0])), disj_upto(ps[0], y)));
    case QSchema::TRICHOT_LT:
      return F::uforall(kY, F::disj(F::disj(less_than(y, num(ps[0])), F::eq(y, num(ps[0]))), less_than(num(ps[0]), y)));
    case QSchema::NOT_LT_ZERO: return F::uforall(kY, F::negation(less_than(y, kZero)));
    case QSchema::LT_SUCC_DISJ: return F::uforall(kY, iff(less_than(y, num(ps[0] + 1)), disj_upto(ps[0], y)));
  }
  throw Error("unknown schema");
}

QProof prove_schema(QSchema s, const std::vector<std::uint64_t>& ps) {
  const Formula goal = schema_formula(s, ps);
  const Term y = v(kY);
  P p = [&]() -> P {
    switch (s) {
      case QSchema::NEQ: return neq(ps[0], ps[1]);
      case QSchema::LE: return le_nm(ps[0], ps[1]);
      case QSchema::LE_MONO: {
        const std::uint64_t n = ps[0], m = ps[1];
        const Term z = v(kZ), D = num(m - n), N = num(n), M = num(m);
        P imp = mp(assoc(z, m - n, n), eqsubst(plus(z, M), plus(plus(z, D), N), Formula::eq(v(kH), y)));
        return gen(le_transfer(M, y, N, y, plus(z, D), std::move(imp)), kY);
      }
      case QSchema::DICHOTOMY: return gen(dichotomy(ps[0]), kY);
      case QSchema::LE_DISJ:
        return gen(combine({le_forward(ps[0]), le_backward(ps[0], ps[0])}, goal.body()), kY);
      case QSchema::TRICHOT_LT:
        return gen(combine({dichotomy(ps[0]), sym_imp(num(ps[0]), y)}, goal.body()), kY);
      case QSchema::NOT_LT_ZERO: return gen(combine({le_forward(0)}, goal.body()), kY);
      case QSchema::LT_SUCC_DISJ: {
        const std::uint64_t n = ps[0];
        const Term N1 = num(n + 1);
        std::vector<P> prem;
        prem.push_back(le_forward(n + 1));
        prem.push_back(le_backward(n, n + 1));
        for (std::uint64_t i = 0; i <= n; ++i) {
          prem.push_back(neq(i, n + 1));
          prem.push_back(sym_imp(y, num(i)));
          prem.push_back(eqsubst(num(i), y, Formula::negation(Formula::eq(v(kH), N1))));
        }
        return gen(combine(std::move(prem), goal.body()), kY);
      }
    }
    throw Error("unknown schema");
  }();
  if (!(p.conclusion == goal)) throw Error("internal: " + to_string(s) + " builder proved " + print(p.conclusion));
  return p;
}

std::optional<std::uint64_t> numeral_of(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Add: {
      if (t.right().kind() != Term::Kind::One) return std::nullopt;
      auto l = numeral_of(t.left());
      if (!l || *l == 0) return std::nullopt;
      return *l + 1;
    }
    default: return std::nullopt;
  }
}

namespace {

void collect_numerals(const Term& t, std::set<std::uint64_t>& out) {
  if (auto n = numeral_of(t)) {
    out.insert(*n);
    return;
  }
  if (t.kind() == Term::Kind::Add || t.kind() == Term::Kind::Mul) {
    collect_numerals(t.left(), out);
    collect_numerals(t.right(), out);
  }
}

void collect_numerals(const Formula& f, std::set<std::uint64_t>& out) {
  switch (f.kind()) {
    case K::Eq:
    case K::Le:
      collect_numerals(f.lhs(), out);
      collect_numerals(f.rhs(), out);
      return;
    case K::Not: collect_numerals(f.sub(), out); return;
    case K::Implies:
    case K::And:
    case K::Or:
      collect_numerals(f.first(), out);
      collect_numerals(f.second(), out);
      return;
    case K::BForall:
    case K::BExists:
      collect_numerals(f.bound(), out);
      collect_numerals(f.body(), out);
      return;
    default: collect_numerals(f.body(), out);
  }
}

constexpr std::uint64_t kRecognizeMax = 64;

}  // namespace

std::optional<std::pair<QSchema, std::vector<std::uint64_t>>> recognize_schema(const Formula& f) {
  std::set<std::uint64_t> seen;
  collect_numerals(f, seen);
  std::vector<std::uint64_t> cands;
  for (auto n : seen)
    if (n <= kRecognizeMax) cands.push_back(n);
  auto try_params = [&](QSchema s, const std::vector<std::uint64_t>& ps) {
    try {
      return schema_formula(s, ps) == f;
    } catch (const Error&) {
      return false;
    }
  };
  for (int i = 0; i <= static_cast<int>(QSchema::LT_SUCC_DISJ); ++i) {
    const auto s = static_cast<QSchema>(i);
    switch (schema_arity(s)) {
      case 0:
        if (try_params(s, {})) return std::make_pair(s, std::vector<std::uint64_t>{});
        break;
      case 1:
        for (auto n : cands)
          if (try_params(s, {n})) return std::make_pair(s, std::vector<std::uint64_t>{n});
        break;
      default:
        for (auto a : cands)
          for (auto b : cands)
            if (try_params(s, {a, b})) return std::make_pair(s, std::vector<std::uint64_t>{a, b});
    }
  }
  return std::nullopt;
}

TheoryOracle q_oracle() {
  TheoryOracle t;
  t.kind = "q_kernel";
  t.conditions = "abcde";
  t.proof_check = [](const Natural& k, const Formula& f) {
    try {
      QProof p = proof_decode(k);
      return p.conclusion == f && check_proof(p).valid;
    } catch (const Error&) {
      return false;
    }
  };
  t.enumerator = [](const Natural& k) -> std::optional<Formula> {
    try {
      QProof p = proof_decode(k);
      if (check_proof(p).valid) return p.conclusion;
    } catch (const Error&) {
    }
    return std::nullopt;
  };
  t.find_proof = [](const Formula& f) -> std::optional<Natural> {
    auto r = recognize_schema(f);
    if (!r) return std::nullopt;
    return proof_code(prove_schema(r->first, r->second));
  };
  return t;
}

}  // namespace arith
