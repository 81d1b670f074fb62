#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arith/eval.hpp"

namespace arith {

/// A theory seen through its proofs. Proofs are indexed by naturals.
struct TheoryOracle {
  std::string kind;
  /// Is proof k a proof of f? Total.
  std::function<bool(const Natural& k, const Formula& f)> proof_check;
  /// The theorem proved by proof k, if k is a proof.
  std::function<std::optional<Formula>(const Natural& k)> enumerator;
  /// The least proof of f the theory can point at, when it has a way to
  /// construct one; empty when proofs can only be found by scanning indices.
  std::function<std::optional<Natural>(const Formula& f)> find_proof;
  /// Membership in the theorem set, for theories where it is decidable by
  /// construction; empty otherwise.
  std::function<bool(const Formula& f)> decides;
  /// Which of the conditions a..e the theory is declared to satisfy.
  std::string conditions;
};

/// Proofs are table indices; proof_check(k, f) iff the entry at k is f.
TheoryOracle mock_oracle(std::map<Natural, Formula> table, std::string conditions = "");
/// Lines "index<TAB>formula"; blank lines and lines starting with # are skipped.
std::map<Natural, Formula> parse_mock_table(const std::string& text);
/// A sentence is a theorem iff it is true with unbounded quantifiers
/// relativized to 0..budget. Its proof index is its compact code.
TheoryOracle truth_oracle(std::uint64_t budget);
/// Proofs are codes of Q derivations, checked by the kernel.
TheoryOracle q_oracle();
/// "mock:<path>", "truth:<budget>" or "q".
TheoryOracle make_oracle(const std::string& spec);

/// T |- f: a constructed proof, a proof among indices 0..budget, or (decidable
/// theories) membership.
Verdict3 provable(const TheoryOracle& t, const Formula& f, std::uint64_t budget);
/// T does not prove f; Unknown unless the theorem set is decidable or a proof turns up.
Verdict3 unprovable(const TheoryOracle& t, const Formula& f, std::uint64_t budget);

enum class RepMode { RelWeak, RelRep, FunWeak, FunRep, FunStrong, FunProvTotal };
RepMode parse_repmode(std::string_view s);
std::string to_string(RepMode m);
inline bool is_function_mode(RepMode m) { return m != RepMode::RelWeak && m != RepMode::RelRep; }

/// The finite part of a function (n -> f(n)) or relation (domain, members)
/// that is tested. For functions m ranges over 0..m_max at each n.
struct RepTable {
  std::map<Natural, Natural> function;
  std::vector<Natural> domain;
  std::set<Natural> members;
  Natural m_max = 0;
};
RepTable function_table(std::map<Natural, Natural> f);  // m_max = max f + 1
RepTable relation_table(std::vector<Natural> domain, std::set<Natural> members);
/// Lines "n<TAB>m" (functions) or "n<TAB>0|1" (relations).
RepTable parse_table(const std::string& text, bool function);

enum class Outcome { Pass, Fail, Inconclusive };
std::string to_string(Outcome o);

struct RepInstance {
  std::string clause;  // e.g. "T |- phi(2, 4)"
  Verdict3 verdict;
};

struct RepReport {
  RepMode mode;
  std::string subject;
  std::vector<RepInstance> instances;
  Outcome overall = Outcome::Pass;
};
std::string to_string(const RepReport& r);

/// Instantiates the mode's clauses at every table point. The uniqueness
/// clauses quantify over the first two variables above those of phi and v1.
RepReport check_representation(RepMode mode, const Formula& phi, const RepTable& table, const TheoryOracle& t,
                               std::uint64_t budget);

/// theta(x, y) = psi(x, y) & (A z <= y)(z < y -> ~psi(x, z)).
Formula strengthen(const Formula& psi);
/// eta(x, y) = [E!z theta(x, z) & theta(x, y)] | [~E!z theta(x, z) & y = 0],
/// with E!u A(u) = (E u)(A(u) & (A w)(A(w) -> w = u)).
Formula totalize(const Formula& theta);

/// psi(n, m) = (E z)[rho(z, <phi(n, m)>) & (A y' <= z)(y' != m -> ~rho(z, <phi(n, y')>))]
/// with rho(z, x) = (E u <= z) Proof(u, x), evaluated against the oracle.
class Rosser {
public:
  Rosser(Formula phi, TheoryOracle t);
  /// z swept over 0..budget.
  Verdict3 holds(const Natural& n, const Natural& m, std::uint64_t budget) const;
  std::string display() const;
  const Formula& phi() const { return phi_; }

private:
  std::optional<Natural> first_proof(const Formula& f, std::uint64_t budget) const;
  Formula phi_;
  TheoryOracle t_;
};
Rosser rosserize(const Formula& phi, const TheoryOracle& t);

/// FunWeak / FunRep for the Rosser predicate: it counts as proved where it
/// holds and as refuted where it fails.
RepReport check_representation(RepMode mode, const Rosser& psi, const RepTable& table, std::uint64_t budget);

/// phi with v0 := n (and v1 := m).
Formula instance(const Formula& phi, const Natural& n);
Formula instance(const Formula& phi, const Natural& n, const Natural& m);

}  // namespace arith
