#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arith/natural.hpp"

namespace arith {

/// A primitive-recursive combinator term: zero, successor, projection,
/// composition and primitive recursion. Immutable and freely shareable.
class PRTerm {
public:
  enum class Kind { Zero, Succ, Proj, Comp, Rec };

  static PRTerm zero();
  static PRTerm succ();
  /// pi_i^n, 1 <= i <= n.
  static PRTerm proj(unsigned i, unsigned n);
  static PRTerm comp(PRTerm f, std::vector<PRTerm> gs);
  /// h(x, 0) = f(x); h(x, y+1) = g(h(x, y), x, y).
  static PRTerm rec(PRTerm f, PRTerm g);

  Kind kind() const { return node_->kind; }
  unsigned proj_index() const { return node_->i; }
  unsigned proj_arity() const { return node_->n; }
  const PRTerm& head() const { return node_->children.front(); }
  std::span<const PRTerm> args() const { return std::span(node_->children).subspan(1); }
  const PRTerm& base() const { return node_->children[0]; }
  const PRTerm& step() const { return node_->children[1]; }

  /// Arity if the arity discipline holds, otherwise -1.
  int arity() const { return node_->arity; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const PRTerm& a, const PRTerm& b);

private:
  struct Node {
    Kind kind;
    unsigned i = 0, n = 0;
    std::vector<PRTerm> children;
    int arity = -1;
  };
  explicit PRTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class ArityError : public Error {
public:
  using Error::Error;
};

/// Returns the arity or throws ArityError naming the offending subterm path.
unsigned validate(const PRTerm& t);

/// Z, S, P(i,n), C(f; g1, ..., gm), R(f; g)
std::string serialize(const PRTerm& t);
PRTerm parse_prterm(std::string_view text);

/// Number of distinct nodes in the term DAG.
std::size_t dag_size(const PRTerm& t);
/// True when needle occurs (by identity) in the DAG of haystack.
bool contains(const PRTerm& haystack, const PRTerm& needle);

using NativeFn = std::function<Natural(std::span<const Natural>)>;

/// Native implementations attached to specific term nodes. Evaluating a
/// node with a kernel is observationally identical to evaluating its
/// combinator definition; the stdlib oracle tests establish that.
struct Kernel {
  std::string name;
  NativeFn fn;
};
using KernelTable = std::unordered_map<const void*, Kernel>;

/// Bounded existential search attached to the composition node produced for
/// (E z <= bound) body. Candidates come from a structural enumerator that
/// yields every witness that can satisfy body; within_bound decides
/// candidate <= bound exactly, or nullopt when it cannot.
struct SearchHook {
  std::string name;
  PRTerm body;
  PRTerm bound;
  std::function<std::vector<Natural>(std::span<const Natural>)> candidates;
  std::function<std::optional<bool>(std::span<const Natural>, const Natural&)> within_bound;
};
using HookTable = std::unordered_map<const void*, SearchHook>;

/// Thrown when the step budget runs out.
class BudgetExhausted : public FeasibilityError {
public:
  using FeasibilityError::FeasibilityError;
};

struct EvalOptions {
  const KernelTable* kernels = nullptr;
  /// Kernel names that must be evaluated through their definitions.
  std::vector<std::string> disabled_kernels;
  const HookTable* hooks = nullptr;
  std::uint64_t max_steps = 200'000'000;
  /// Largest recursion counter accepted before giving up.
  std::uint64_t max_recursion = 50'000'000;
  bool memoize = true;
};

Natural eval_pr(const PRTerm& t, std::span<const Natural> args, const EvalOptions& opts = {});
Natural eval_pr(const PRTerm& t, std::initializer_list<std::uint64_t> args, const EvalOptions& opts = {});

}  // namespace arith
