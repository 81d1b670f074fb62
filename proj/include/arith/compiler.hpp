#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arith/ast.hpp"
#include "arith/lazy.hpp"
#include "arith/stdlib.hpp"

namespace arith {

/// Named values in scope, innermost last.
class Env {
public:
  void push(std::string name, Natural v) { vals_.emplace_back(std::move(name), std::move(v)); }
  const Natural& get(std::string_view name) const;
  std::size_t size() const { return vals_.size(); }

private:
  std::vector<std::pair<std::string, Natural>> vals_;
};

namespace ir {

/// A PR function usable in expressions, with the search hooks its term needs.
struct Fn {
  PRTerm term = PRTerm::zero();
  std::shared_ptr<const HookTable> hooks;
  std::string name;
};
Fn lib(std::string_view stdlib_name);

class Expr {
public:
  enum class Kind { Var, Const, App };
  static Expr var(std::string name);
  static Expr konst(Natural c);
  static Expr app(Fn f, std::vector<Expr> args);

  Kind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  const Natural& value() const { return n_->value; }
  const Fn& fn() const { return n_->fn; }
  const std::vector<Expr>& args() const { return n_->args; }

private:
  struct Node {
    Kind kind;
    std::string name;
    Natural value;
    Fn fn;
    std::vector<Expr> args;
  };
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// shorthands
Expr V(std::string name);
Expr K(const Natural& c);
Expr F(std::string_view stdlib_name, std::vector<Expr> args);
Expr F(const Fn& f, std::vector<Expr> args);

/// Candidate witnesses for a quantifier, computed from the values in scope.
using Provider = std::function<std::vector<Natural>(const Env&)>;

class Rel {
public:
  enum class Kind { Atom, Eq, Le, Lt, Not, And, Or, Implies, Iff, Forall, Exists };

  /// True iff the expression is nonzero.
  static Rel atom(Expr e);
  static Rel eq(Expr a, Expr b);
  static Rel le(Expr a, Expr b);
  static Rel lt(Expr a, Expr b);
  static Rel negation(Rel r);
  static Rel conj(std::vector<Rel> rs);
  static Rel disj(std::vector<Rel> rs);
  static Rel implies(Rel a, Rel b);
  static Rel iff(Rel a, Rel b);
  /// (A v <= bound) / (A v < bound) when strict. A provider turns the
  /// search into a hooked candidate search (for Forall: candidates for a
  /// counterexample).
  static Rel forall(std::string v, Expr bound, Rel body, bool strict = false, Provider p = {});
  static Rel exists(std::string v, Expr bound, Rel body, bool strict = false, Provider p = {});

  Kind kind() const { return n_->kind; }
  const std::vector<Expr>& exprs() const { return n_->exprs; }
  const std::vector<Rel>& subs() const { return n_->subs; }
  const std::string& var() const { return n_->var; }
  bool strict() const { return n_->strict; }
  const Provider& provider() const { return n_->provider; }

private:
  struct Node {
    Kind kind;
    std::vector<Expr> exprs;
    std::vector<Rel> subs;
    std::string var;
    bool strict = false;
    Provider provider;
  };
  explicit Rel(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Rel make(Node n);
  std::shared_ptr<const Node> n_;
};

}  // namespace ir

struct Compiled {
  PRTerm term = PRTerm::zero();
  HookTable hooks;
};

/// Characteristic function of r with arguments var_order (non-empty).
Compiled compile(const ir::Rel& r, const std::vector<std::string>& var_order);
/// Value of e as a function of var_order.
Compiled compile(const ir::Expr& e, const std::vector<std::string>& var_order);

/// A compiled relation (or function) packaged for use inside other expressions.
ir::Fn as_fn(std::string name, Compiled c);

/// Evaluation with stdlib kernels and the compiled hooks switched on.
EvalOptions options(const Compiled& c, EvalOptions base = {});
Natural eval(const Compiled& c, std::span<const Natural> args, EvalOptions base = {});
Natural eval(const Compiled& c, std::initializer_list<std::uint64_t> args, EvalOptions base = {});

/// Exact value of e in env, using the stdlib kernels and the hooks of its functions.
Natural eval_expr(const ir::Expr& e, const Env& env);
/// e in env as a lazy number; add/mul/pow/prime/succ stay symbolic.
Lazy lazy_expr(const ir::Expr& e, const Env& env);

// ---- Delta0 formulas ----

/// Quantifier bounds given by PR functions, keyed by the pre-order ordinal of
/// the bounded quantifier node (0 = first quantifier met). Each term takes
/// the variables in scope: var_order, then enclosing quantified variables.
using PRBounds = std::map<std::size_t, PRTerm>;

/// Variables are named "v<i>".
ir::Rel lower(const Formula& f, const std::vector<VarIndex>& var_order, const PRBounds& pr_bounds = {});
Compiled compile(const Formula& f, const std::vector<VarIndex>& var_order, const PRBounds& pr_bounds = {});

}  // namespace arith
