#include "arith/ast.hpp"

#include <algorithm>

namespace arith {

// ---- Term ----

Term Term::zero() { return Term(std::make_shared<const Node>(Node{Kind::Zero})); }
Term Term::one() { return Term(std::make_shared<const Node>(Node{Kind::One})); }
Term Term::var(VarIndex i) { return Term(std::make_shared<const Node>(Node{Kind::Var, i})); }
Term Term::add(Term l, Term r) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Add, 0, std::make_shared<const Term>(std::move(l)), std::make_shared<const Term>(std::move(r))}));
}
Term Term::mul(Term l, Term r) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Mul, 0, std::make_shared<const Term>(std::move(l)), std::make_shared<const Term>(std::move(r))}));
}

bool Term::is_closed() const { return free_vars(*this).empty(); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One: return true;
    case Term::Kind::Var: return a.var_index() == b.var_index();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

// ---- Formula ----

namespace {

template <class T>
std::shared_ptr<const T> box(T v) { return std::make_shared<const T>(std::move(v)); }

}  // namespace

Formula Formula::eq(Term l, Term r) {
  return Formula(box(Node{Kind::Eq, 0, box(std::move(l)), box(std::move(r)), nullptr, nullptr}));
}
Formula Formula::le(Term l, Term r) {
  return Formula(box(Node{Kind::Le, 0, box(std::move(l)), box(std::move(r)), nullptr, nullptr}));
}
Formula Formula::negation(Formula f) {
  return Formula(box(Node{Kind::Not, 0, nullptr, nullptr, box(std::move(f)), nullptr}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(box(Node{Kind::Implies, 0, nullptr, nullptr, box(std::move(a)), box(std::move(b))}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(box(Node{Kind::And, 0, nullptr, nullptr, box(std::move(a)), box(std::move(b))}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(box(Node{Kind::Or, 0, nullptr, nullptr, box(std::move(a)), box(std::move(b))}));
}
Formula Formula::bforall(VarIndex v, Term bound, Formula body) {
  if (free_vars(bound).count(v)) throw Error("bound variable v" + std::to_string(v) + " occurs free in its bound");
  return Formula(box(Node{Kind::BForall, v, box(std::move(bound)), nullptr, box(std::move(body)), nullptr}));
}
Formula Formula::bexists(VarIndex v, Term bound, Formula body) {
  if (free_vars(bound).count(v)) throw Error("bound variable v" + std::to_string(v) + " occurs free in its bound");
  return Formula(box(Node{Kind::BExists, v, box(std::move(bound)), nullptr, box(std::move(body)), nullptr}));
}
Formula Formula::uforall(VarIndex v, Formula body) {
  return Formula(box(Node{Kind::UForall, v, nullptr, nullptr, box(std::move(body)), nullptr}));
}
Formula Formula::uexists(VarIndex v, Formula body) {
  return Formula(box(Node{Kind::UExists, v, nullptr, nullptr, box(std::move(body)), nullptr}));
}

bool Formula::is_quantifier() const {
  switch (kind()) {
    case Kind::BForall:
    case Kind::BExists:
    case Kind::UForall:
    case Kind::UExists: return true;
    default: return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Eq:
    case K::Le: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case K::Not: return a.sub() == b.sub();
    case K::Implies:
    case K::And:
    case K::Or: return a.first() == b.first() && a.second() == b.second();
    case K::BForall:
    case K::BExists: return a.var() == b.var() && a.bound() == b.bound() && a.body() == b.body();
    case K::UForall:
    case K::UExists: return a.var() == b.var() && a.body() == b.body();
  }
  return false;
}

// ---- printing ----

std::string print(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::Var: return "v" + std::to_string(t.var_index());
    case Term::Kind::Add: return "(" + print(t.left()) + " + " + print(t.right()) + ")";
    case Term::Kind::Mul: return "(" + print(t.left()) + " * " + print(t.right()) + ")";
  }
  return {};
}

std::string print(const Formula& f) {
  using K = Formula::Kind;
  auto var = [&] { return "v" + std::to_string(f.var()); };
  switch (f.kind()) {
    case K::Eq: return "(" + print(f.lhs()) + " = " + print(f.rhs()) + ")";
    case K::Le: return "(" + print(f.lhs()) + " <= " + print(f.rhs()) + ")";
    case K::Not: return "~" + print(f.sub());
    case K::Implies: return "(" + print(f.first()) + " -> " + print(f.second()) + ")";
    case K::And: return "(" + print(f.first()) + " & " + print(f.second()) + ")";
    case K::Or: return "(" + print(f.first()) + " | " + print(f.second()) + ")";
    case K::BForall: return "(A " + var() + " <= " + print(f.bound()) + ")" + print(f.body());
    case K::BExists: return "(E " + var() + " <= " + print(f.bound()) + ")" + print(f.body());
    case K::UForall: return "(A " + var() + ")" + print(f.body());
    case K::UExists: return "(E " + var() + ")" + print(f.body());
  }
  return {};
}

std::string print(const Syntax& s) {
  return std::visit([](const auto& x) { return print(x); }, s);
}

// ---- numerals, variables ----

Term numeral(std::uint64_t n) {
  if (n == 0) return Term::zero();
  Term t = Term::one();
  for (std::uint64_t i = 1; i < n; ++i) t = Term::add(t, Term::one());
  return t;
}

Term numeral(const Natural& n) {
  if (n > 1'000'000) throw FeasibilityError("numeral too large to build: " + to_string(n));
  return numeral(to_u64(n));
}

namespace {

void collect(const Term& t, std::set<VarIndex>& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.var_index()); break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
    default: break;
  }
}

void collect_free(const Formula& f, std::set<VarIndex>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      break;
    case K::Not: collect_free(f.sub(), out); break;
    case K::Implies:
    case K::And:
    case K::Or:
      collect_free(f.first(), out);
      collect_free(f.second(), out);
      break;
    case K::BForall:
    case K::BExists:
    case K::UForall:
    case K::UExists: {
      std::set<VarIndex> inner;
      collect_free(f.body(), inner);
      inner.erase(f.var());
      out.insert(inner.begin(), inner.end());
      if (f.is_bounded_quantifier()) collect(f.bound(), out);
      break;
    }
  }
}

void collect_all(const Formula& f, std::set<VarIndex>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      break;
    case K::Not: collect_all(f.sub(), out); break;
    case K::Implies:
    case K::And:
    case K::Or:
      collect_all(f.first(), out);
      collect_all(f.second(), out);
      break;
    default:
      out.insert(f.var());
      if (f.is_bounded_quantifier()) collect(f.bound(), out);
      collect_all(f.body(), out);
  }
}

}  // namespace

std::set<VarIndex> free_vars(const Term& t) {
  std::set<VarIndex> s;
  collect(t, s);
  return s;
}

std::set<VarIndex> free_vars(const Formula& f) {
  std::set<VarIndex> s;
  collect_free(f, s);
  return s;
}

std::set<VarIndex> all_vars(const Formula& f) {
  std::set<VarIndex> s;
  collect_all(f, s);
  return s;
}

bool is_delta0(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le: return true;
    case K::Not: return is_delta0(f.sub());
    case K::Implies:
    case K::And:
    case K::Or: return is_delta0(f.first()) && is_delta0(f.second());
    case K::BForall:
    case K::BExists: return is_delta0(f.body());
    default: return false;
  }
}

std::size_t size(const Term& t) {
  if (t.kind() == Term::Kind::Add || t.kind() == Term::Kind::Mul) return 1 + size(t.left()) + size(t.right());
  return 1;
}

std::size_t size(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le: return 1 + size(f.lhs()) + size(f.rhs());
    case K::Not: return 1 + size(f.sub());
    case K::Implies:
    case K::And:
    case K::Or: return 1 + size(f.first()) + size(f.second());
    case K::BForall:
    case K::BExists: return 1 + size(f.bound()) + size(f.body());
    default: return 1 + size(f.body());
  }
}

// ---- substitution ----

Term substitute(const Term& t, VarIndex v, const Term& r) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.var_index() == v ? r : t;
    case Term::Kind::Add: return Term::add(substitute(t.left(), v, r), substitute(t.right(), v, r));
    case Term::Kind::Mul: return Term::mul(substitute(t.left(), v, r), substitute(t.right(), v, r));
    default: return t;
  }
}

namespace {

// Returns f unchanged (same node) when v is not free.
Formula subst(const Formula& f, VarIndex v, const Term& r, const std::set<VarIndex>& rvars) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: return Formula::eq(substitute(f.lhs(), v, r), substitute(f.rhs(), v, r));
    case K::Le: return Formula::le(substitute(f.lhs(), v, r), substitute(f.rhs(), v, r));
    case K::Not: return Formula::negation(subst(f.sub(), v, r, rvars));
    case K::Implies: return Formula::implies(subst(f.first(), v, r, rvars), subst(f.second(), v, r, rvars));
    case K::And: return Formula::conj(subst(f.first(), v, r, rvars), subst(f.second(), v, r, rvars));
    case K::Or: return Formula::disj(subst(f.first(), v, r, rvars), subst(f.second(), v, r, rvars));
    default: break;
  }
  const bool bounded = f.is_bounded_quantifier();
  if (f.var() == v) {
    if (!bounded) return f;
    Term b = substitute(f.bound(), v, r);
    return f.kind() == K::BForall ? Formula::bforall(v, b, f.body()) : Formula::bexists(v, b, f.body());
  }
  const bool occurs = free_vars(f.body()).count(v) > 0;
  if (occurs && rvars.count(f.var()))
    throw Error("substitution would capture v" + std::to_string(f.var()));
  Formula body = occurs ? subst(f.body(), v, r, rvars) : f.body();
  switch (f.kind()) {
    case K::BForall: return Formula::bforall(f.var(), substitute(f.bound(), v, r), body);
    case K::BExists: return Formula::bexists(f.var(), substitute(f.bound(), v, r), body);
    case K::UForall: return Formula::uforall(f.var(), body);
    default: return Formula::uexists(f.var(), body);
  }
}

}  // namespace

Formula substitute(const Formula& f, VarIndex v, const Term& r) {
  if (!free_vars(f).count(v)) return f;
  return subst(f, v, r, free_vars(r));
}

bool substitutable(const Formula& f, VarIndex v, const Term& r) {
  try {
    substitute(f, v, r);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---- desugaring ----

Formula desugar(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le: return f;
    case K::Not: return Formula::negation(desugar(f.sub()));
    case K::Implies: return Formula::implies(desugar(f.first()), desugar(f.second()));
    case K::And:  // ~(a -> ~b)
      return Formula::negation(Formula::implies(desugar(f.first()), Formula::negation(desugar(f.second()))));
    case K::Or:  // (~a -> b)
      return Formula::implies(Formula::negation(desugar(f.first())), desugar(f.second()));
    case K::BForall: return Formula::bforall(f.var(), f.bound(), desugar(f.body()));
    case K::BExists:
      return Formula::negation(Formula::bforall(f.var(), f.bound(), Formula::negation(desugar(f.body()))));
    case K::UForall: return Formula::uforall(f.var(), desugar(f.body()));
    case K::UExists: return Formula::negation(Formula::uforall(f.var(), Formula::negation(desugar(f.body()))));
  }
  return f;
}

bool is_core(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq:
    case K::Le: return true;
    case K::Not: return is_core(f.sub());
    case K::Implies: return is_core(f.first()) && is_core(f.second());
    case K::BForall: return is_core(f.body());
    default: return false;
  }
}

Formula less_than(const Term& x, const Term& y) {
  return Formula::conj(Formula::le(x, y), Formula::negation(Formula::eq(x, y)));
}

Formula iff(const Formula& a, const Formula& b) {
  return Formula::conj(Formula::implies(a, b), Formula::implies(b, a));
}

}  // namespace arith
