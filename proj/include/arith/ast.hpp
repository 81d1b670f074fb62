#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "arith/natural.hpp"

namespace arith {

using VarIndex = std::uint32_t;

/// Terms over <0, 1, +, *>.
class Term {
public:
  enum class Kind { Zero, One, Var, Add, Mul };

  static Term zero();
  static Term one();
  static Term var(VarIndex i);
  static Term add(Term l, Term r);
  static Term mul(Term l, Term r);

  Kind kind() const { return node_->kind; }
  VarIndex var_index() const { return node_->index; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }
  bool is_closed() const;

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node {
    Kind kind;
    VarIndex index = 0;
    std::shared_ptr<const Term> left, right;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Formulas of first-order arithmetic; bounded quantifiers are first-class.
class Formula {
public:
  enum class Kind { Eq, Le, Not, Implies, And, Or, BForall, BExists, UForall, UExists };

  static Formula eq(Term l, Term r);
  static Formula le(Term l, Term r);
  static Formula negation(Formula f);
  static Formula implies(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  /// Throws Error when v occurs in the bound.
  static Formula bforall(VarIndex v, Term bound, Formula body);
  static Formula bexists(VarIndex v, Term bound, Formula body);
  static Formula uforall(VarIndex v, Formula body);
  static Formula uexists(VarIndex v, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_atomic() const { return kind() == Kind::Eq || kind() == Kind::Le; }
  bool is_bounded_quantifier() const { return kind() == Kind::BForall || kind() == Kind::BExists; }
  bool is_quantifier() const;
  const Term& lhs() const { return *node_->lt; }
  const Term& rhs() const { return *node_->rt; }
  const Term& bound() const { return *node_->lt; }
  const Formula& sub() const { return *node_->a; }
  const Formula& first() const { return *node_->a; }
  const Formula& second() const { return *node_->b; }
  const Formula& body() const { return *node_->a; }
  VarIndex var() const { return node_->var; }

  /// Identity of the underlying node; stable across copies.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Kind kind;
    VarIndex var = 0;
    std::shared_ptr<const Term> lt, rt;
    std::shared_ptr<const Formula> a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using Syntax = std::variant<Formula, Term>;

std::string print(const Term& t);
std::string print(const Formula& f);
std::string print(const Syntax& s);

/// Parses either a formula or a term. Errors carry the character offset.
Syntax parse(std::string_view text);
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// 0, 1, (1 + 1), ((1 + 1) + 1), ...
Term numeral(std::uint64_t n);
Term numeral(const Natural& n);

std::set<VarIndex> free_vars(const Term& t);
std::set<VarIndex> free_vars(const Formula& f);
/// Every variable index occurring anywhere, bound or free.
std::set<VarIndex> all_vars(const Formula& f);
bool is_delta0(const Formula& f);
std::size_t size(const Term& t);
std::size_t size(const Formula& f);

Term substitute(const Term& t, VarIndex v, const Term& replacement);
/// Replaces free occurrences of v. Throws Error on variable capture.
Formula substitute(const Formula& f, VarIndex v, const Term& replacement);
/// True when replacement can be substituted for v without capture.
bool substitutable(const Formula& f, VarIndex v, const Term& replacement);

/// Rewrites into the {~, ->, (A x <= t)} core (plus unbounded A kept as-is;
/// unbounded E becomes ~(A x)~).
Formula desugar(const Formula& f);
bool is_core(const Formula& f);

/// x < y as (x <= y & ~(x = y)).
Formula less_than(const Term& x, const Term& y);
/// (a -> b) & (b -> a)
Formula iff(const Formula& a, const Formula& b);

}  // namespace arith
