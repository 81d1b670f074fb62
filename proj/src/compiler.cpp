#include "arith/compiler.hpp"

#include <algorithm>

namespace arith {

const Natural& Env::get(std::string_view name) const {
  for (auto it = vals_.rbegin(); it != vals_.rend(); ++it)
    if (it->first == name) return it->second;
  throw Error("unbound variable '" + std::string(name) + "'");
}

namespace ir {

Fn lib(std::string_view stdlib_name) { return Fn{stdlib(stdlib_name), nullptr, std::string(stdlib_name)}; }

Expr Expr::var(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::Var, std::move(name), 0, Fn{PRTerm::zero(), nullptr, {}}, {}}));
}
Expr Expr::konst(Natural c) {
  return Expr(std::make_shared<const Node>(Node{Kind::Const, {}, std::move(c), Fn{PRTerm::zero(), nullptr, {}}, {}}));
}
Expr Expr::app(Fn f, std::vector<Expr> args) {
  if (f.term.arity() != static_cast<int>(args.size()))
    throw ArityError("function '" + f.name + "' has arity " + std::to_string(f.term.arity()) + ", applied to " +
                     std::to_string(args.size()) + " arguments");
  return Expr(std::make_shared<const Node>(Node{Kind::App, {}, 0, std::move(f), std::move(args)}));
}

Expr V(std::string name) { return Expr::var(std::move(name)); }
Expr K(const Natural& c) { return Expr::konst(c); }
Expr F(std::string_view stdlib_name, std::vector<Expr> args) { return Expr::app(lib(stdlib_name), std::move(args)); }
Expr F(const Fn& f, std::vector<Expr> args) { return Expr::app(f, std::move(args)); }

Rel Rel::make(Node n) { return Rel(std::make_shared<const Node>(std::move(n))); }
Rel Rel::atom(Expr e) { return make({Kind::Atom, {std::move(e)}}); }
Rel Rel::eq(Expr a, Expr b) { return make({Kind::Eq, {std::move(a), std::move(b)}}); }
Rel Rel::le(Expr a, Expr b) { return make({Kind::Le, {std::move(a), std::move(b)}}); }
Rel Rel::lt(Expr a, Expr b) { return make({Kind::Lt, {std::move(a), std::move(b)}}); }
Rel Rel::negation(Rel r) { return make({Kind::Not, {}, {std::move(r)}}); }
Rel Rel::conj(std::vector<Rel> rs) { return make({Kind::And, {}, std::move(rs)}); }
Rel Rel::disj(std::vector<Rel> rs) { return make({Kind::Or, {}, std::move(rs)}); }
Rel Rel::implies(Rel a, Rel b) { return make({Kind::Implies, {}, {std::move(a), std::move(b)}}); }
Rel Rel::iff(Rel a, Rel b) { return make({Kind::Iff, {}, {std::move(a), std::move(b)}}); }
Rel Rel::forall(std::string v, Expr bound, Rel body, bool strict, Provider p) {
  return make({Kind::Forall, {std::move(bound)}, {std::move(body)}, std::move(v), strict, std::move(p)});
}
Rel Rel::exists(std::string v, Expr bound, Rel body, bool strict, Provider p) {
  return make({Kind::Exists, {std::move(bound)}, {std::move(body)}, std::move(v), strict, std::move(p)});
}

}  // namespace ir

using namespace ir;
using namespace prb;

namespace {

using Scope = std::vector<std::string>;

Env make_env(const Scope& names, std::span<const Natural> vals) {
  Env env;
  for (std::size_t i = 0; i < names.size(); ++i) env.push(names[i], vals[i]);
  return env;
}

class Compiler {
public:
  HookTable hooks;

  PRTerm expr(const Expr& e, const Scope& scope) {
    const auto n = static_cast<unsigned>(scope.size());
    switch (e.kind()) {
      case Expr::Kind::Var: {
        for (std::size_t i = scope.size(); i-- > 0;)
          if (scope[i] == e.name()) return P(static_cast<unsigned>(i + 1), n);
        throw Error("variable '" + e.name() + "' is not in scope");
      }
      case Expr::Kind::Const: return konst(e.value(), n);
      case Expr::Kind::App: {
        if (e.fn().hooks) hooks.insert(e.fn().hooks->begin(), e.fn().hooks->end());
        std::vector<PRTerm> gs;
        for (const auto& a : e.args()) gs.push_back(expr(a, scope));
        return C(e.fn().term, std::move(gs));
      }
    }
    return PRTerm::zero();
  }

  PRTerm rel(const Rel& r, Scope& scope) {
    const auto n = static_cast<unsigned>(scope.size());
    auto atom2 = [&](const char* chi) {
      return C(stdlib(chi), {expr(r.exprs()[0], scope), expr(r.exprs()[1], scope)});
    };
    switch (r.kind()) {
      case Rel::Kind::Atom: return C(stdlib("sg"), {expr(r.exprs()[0], scope)});
      case Rel::Kind::Eq: return atom2("chi_eq");
      case Rel::Kind::Le: return atom2("chi_le");
      case Rel::Kind::Lt: return atom2("chi_lt");
      case Rel::Kind::Not: return rel_combine(RelOp::Not, {rel(r.subs()[0], scope)});
      case Rel::Kind::And:
      case Rel::Kind::Or: {
        const bool conj = r.kind() == Rel::Kind::And;
        if (r.subs().empty()) return konst(conj ? 1 : 0, n);
        PRTerm acc = rel(r.subs()[0], scope);
        for (std::size_t i = 1; i < r.subs().size(); ++i)
          acc = rel_combine(conj ? RelOp::And : RelOp::Or, {acc, rel(r.subs()[i], scope)});
        return acc;
      }
      case Rel::Kind::Implies:
        return rel_combine(RelOp::Or, {rel_combine(RelOp::Not, {rel(r.subs()[0], scope)}), rel(r.subs()[1], scope)});
      case Rel::Kind::Iff: return C(stdlib("chi_eq"), {rel(r.subs()[0], scope), rel(r.subs()[1], scope)});
      case Rel::Kind::Forall:
      case Rel::Kind::Exists: return quantifier(r, scope);
    }
    return PRTerm::zero();
  }

private:
  PRTerm quantifier(const Rel& r, Scope& scope) {
    const auto n = static_cast<unsigned>(scope.size());
    const bool universal = r.kind() == Rel::Kind::Forall;
    const PRTerm bound = expr(r.exprs()[0], scope);
    scope.push_back(r.var());
    const PRTerm body = rel(r.subs()[0], scope);
    scope.pop_back();

    PRTerm chi = body;
    if (r.strict()) {
      std::vector<PRTerm> outer;
      for (unsigned i = 1; i <= n; ++i) outer.push_back(P(i, n + 1));
      const PRTerm lt = C(stdlib("chi_lt"), {P(n + 1, n + 1), C(bound, std::move(outer))});
      chi = universal ? rel_combine(RelOp::Or, {rel_combine(RelOp::Not, {lt}), body})
                      : rel_combine(RelOp::And, {lt, body});
    }
    if (!r.provider()) return rel_combine(universal ? RelOp::BForall : RelOp::BExists, {chi, bound});

    // hooked: forall becomes "no counterexample among the candidates"
    const PRTerm searched = universal ? rel_combine(RelOp::Not, {chi}) : chi;
    const PRTerm node = rel_combine(RelOp::BExists, {searched, bound});
    const Scope names = scope;
    const Provider provider = r.provider();
    const Expr bexpr = r.exprs()[0];
    const bool strict = r.strict();
    SearchHook h{
        r.var(),
        universal ? rel_combine(RelOp::Not, {body}) : body,
        bound,
        [names, provider](std::span<const Natural> args) { return provider(make_env(names, args)); },
        [names, bexpr, strict](std::span<const Natural> args, const Natural& c) -> std::optional<bool> {
          const Lazy b = lazy_expr(bexpr, make_env(names, args));
          const Natural need = strict ? c + 1 : c;
          if (auto ok = b.bounds(need)) return ok;
          return need <= b.value();
        }};
    hooks.insert_or_assign(node.id(), std::move(h));
    return universal ? rel_combine(RelOp::Not, {node}) : node;
  }
};

}  // namespace

Compiled compile(const Rel& r, const std::vector<std::string>& var_order) {
  if (var_order.empty()) throw Error("compile needs at least one argument variable");
  Compiler c;
  Scope scope = var_order;
  PRTerm t = c.rel(r, scope);
  validate(t);
  return {std::move(t), std::move(c.hooks)};
}

Compiled compile(const Expr& e, const std::vector<std::string>& var_order) {
  if (var_order.empty()) throw Error("compile needs at least one argument variable");
  Compiler c;
  PRTerm t = c.expr(e, var_order);
  validate(t);
  return {std::move(t), std::move(c.hooks)};
}

Fn as_fn(std::string name, Compiled c) {
  return Fn{std::move(c.term), std::make_shared<const HookTable>(std::move(c.hooks)), std::move(name)};
}

EvalOptions options(const Compiled& c, EvalOptions base) {
  if (!base.kernels) base.kernels = &stdlib_kernels();
  base.hooks = &c.hooks;
  return base;
}

Natural eval(const Compiled& c, std::span<const Natural> args, EvalOptions base) {
  return eval_pr(c.term, args, options(c, std::move(base)));
}

Natural eval(const Compiled& c, std::initializer_list<std::uint64_t> args, EvalOptions base) {
  std::vector<Natural> v;
  for (auto a : args) v.push_back(nat(a));
  return eval(c, v, std::move(base));
}

namespace {

Natural apply_fn(const Fn& f, const std::vector<Natural>& args) {
  EvalOptions o{.kernels = &stdlib_kernels(), .hooks = f.hooks.get()};
  return eval_pr(f.term, args, o);
}

bool is_lib(const Fn& f, const char* name) { return f.term.id() == stdlib(name).id(); }

}  // namespace

Natural eval_expr(const Expr& e, const Env& env) {
  switch (e.kind()) {
    case Expr::Kind::Var: return env.get(e.name());
    case Expr::Kind::Const: return e.value();
    case Expr::Kind::App: {
      std::vector<Natural> args;
      for (const auto& a : e.args()) args.push_back(eval_expr(a, env));
      return apply_fn(e.fn(), args);
    }
  }
  return 0;
}

Lazy lazy_expr(const Expr& e, const Env& env) {
  if (e.kind() != Expr::Kind::App) return Lazy::constant(eval_expr(e, env));
  const Fn& f = e.fn();
  std::vector<Lazy> a;
  for (const auto& x : e.args()) a.push_back(lazy_expr(x, env));
  if (f.term.kind() == PRTerm::Kind::Succ) return Lazy::add(a[0], Lazy::constant(1));
  if (is_lib(f, "add")) return Lazy::add(a[0], a[1]);
  if (is_lib(f, "mul")) return Lazy::mul(a[0], a[1]);
  if (is_lib(f, "pow")) return Lazy::pow(a[0], a[1]);
  if (is_lib(f, "prime")) return Lazy::prime(a[0]);
  std::vector<Natural> vals;
  for (const auto& l : a) vals.push_back(l.value());
  return Lazy::constant(apply_fn(f, vals));
}

// ---- Delta0 formulas ----

namespace {

std::string vname(VarIndex i) { return "v" + std::to_string(i); }

class Lowering {
public:
  explicit Lowering(const PRBounds& pb) : pb_(pb) {}

  Expr term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Zero: return K(0);
      case Term::Kind::One: return K(1);
      case Term::Kind::Var: return V(vname(t.var_index()));
      case Term::Kind::Add: return F("add", {term(t.left()), term(t.right())});
      case Term::Kind::Mul: return F("mul", {term(t.left()), term(t.right())});
    }
    return K(0);
  }

  Rel formula(const Formula& f, std::vector<VarIndex>& scope) {
    using FK = Formula::Kind;
    switch (f.kind()) {
      case FK::Eq: return Rel::eq(term(f.lhs()), term(f.rhs()));
      case FK::Le: return Rel::le(term(f.lhs()), term(f.rhs()));
      case FK::Not: return Rel::negation(formula(f.sub(), scope));
      case FK::Implies: {
        Rel a = formula(f.first(), scope);
        return Rel::implies(a, formula(f.second(), scope));
      }
      case FK::And:
      case FK::Or: {
        Rel a = formula(f.first(), scope);
        Rel b = formula(f.second(), scope);
        return f.kind() == FK::And ? Rel::conj({a, b}) : Rel::disj({a, b});
      }
      case FK::BForall:
      case FK::BExists: {
        const std::size_t ord = ordinal_++;
        Expr bound = K(0);
        if (auto it = pb_.find(ord); it != pb_.end()) {
          if (it->second.arity() != static_cast<int>(scope.size()))
            throw ArityError("bound for quantifier " + std::to_string(ord) + " must take " +
                             std::to_string(scope.size()) + " arguments, has arity " +
                             std::to_string(it->second.arity()));
          std::vector<Expr> args;
          for (VarIndex v : scope) args.push_back(V(vname(v)));
          bound = F(Fn{it->second, nullptr, "bound" + std::to_string(ord)}, std::move(args));
        } else {
          bound = term(f.bound());
        }
        scope.push_back(f.var());
        Rel body = formula(f.body(), scope);
        scope.pop_back();
        return f.kind() == FK::BForall ? Rel::forall(vname(f.var()), bound, body)
                                       : Rel::exists(vname(f.var()), bound, body);
      }
      default: throw Error("unbounded quantifier in " + print(f) + "; only Delta0 formulas compile");
    }
  }

  std::size_t quantifiers() const { return ordinal_; }

private:
  const PRBounds& pb_;
  std::size_t ordinal_ = 0;
};

}  // namespace

Rel lower(const Formula& f, const std::vector<VarIndex>& var_order, const PRBounds& pr_bounds) {
  for (VarIndex v : free_vars(f))
    if (std::find(var_order.begin(), var_order.end(), v) == var_order.end())
      throw Error("free variable " + vname(v) + " is missing from the variable order");
  Lowering l(pr_bounds);
  std::vector<VarIndex> scope = var_order;
  Rel r = l.formula(f, scope);
  if (!pr_bounds.empty() && pr_bounds.rbegin()->first >= l.quantifiers())
    throw Error("no bounded quantifier with ordinal " + std::to_string(pr_bounds.rbegin()->first));
  return r;
}

Compiled compile(const Formula& f, const std::vector<VarIndex>& var_order, const PRBounds& pr_bounds) {
  std::vector<std::string> names;
  for (VarIndex v : var_order) names.push_back(vname(v));
  return compile(lower(f, var_order, pr_bounds), names);
}

}  // namespace arith
