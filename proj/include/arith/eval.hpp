#pragma once

#include <map>
#include <string>

#include "arith/ast.hpp"

namespace arith {

using Valuation = std::map<VarIndex, Natural>;

enum class Verdict3 { False, True, Unknown };

std::string to_string(Verdict3 v);
inline Verdict3 verdict(bool b) { return b ? Verdict3::True : Verdict3::False; }
Verdict3 kleene_not(Verdict3 a);
Verdict3 kleene_and(Verdict3 a, Verdict3 b);
Verdict3 kleene_or(Verdict3 a, Verdict3 b);
Verdict3 kleene_implies(Verdict3 a, Verdict3 b);

/// Parses "v0=4,v1=7".
Valuation parse_valuation(const std::string& text);

Natural eval_term(const Term& t, const Valuation& rho);

/// Truth of a bounded formula in the standard model. Bounded quantifiers
/// range over 0..bound inclusive. Throws Error on unbounded quantifiers.
bool eval_delta0(const Formula& f, const Valuation& rho);

/// eval_delta0 with at most `steps` quantifier iterations; Unknown when they
/// run out or a bound is too large to search.
Verdict3 eval_delta0_budgeted(const Formula& f, const Valuation& rho, std::uint64_t steps);

/// Three-valued evaluation. Unbounded E searches witnesses 0..budget and is
/// Unknown when none is found; unbounded A searches counterexamples and is
/// Unknown when none is found. Bounded parts are exact.
Verdict3 eval_fo(const Formula& f, const Valuation& rho, std::uint64_t budget);

/// Budgeted truth: unbounded quantifiers are relativized to 0..budget, which
/// makes the evaluation two-valued. Exact on bounded formulas. Subformula
/// results are memoized per call, so nested searches stay polynomial.
bool eval_truncated(const Formula& f, const Valuation& rho, std::uint64_t budget);

}  // namespace arith
