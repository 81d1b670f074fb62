#pragma once

#include <array>
#include <utility>

#include "arith/syntax_defs.hpp"

namespace arith {

/// Truth of the formula coded by x with every free variable set to a.
bool sat_direct(Scheme s, const Natural& x, const Natural& a);
Verdict3 sat_direct_budgeted(Scheme s, const Natural& x, const Natural& a, std::uint64_t steps);

/// <a, a, ..., a> covering every variable of f (bound ones too).
Natural constant_valuation(Scheme s, const Formula& f, const Natural& a);

/// An annotated building sequence: t lists triples <i, z, w> in post-order,
/// ending with the one for the last element of s under y.
struct SatWitness {
  Natural s, t;
  std::vector<std::array<Natural, 3>> triples;
  bool truth = false;
};
/// From a formula building sequence s (variables past the end of y read 0).
SatWitness sat_witness(Scheme sc, const Natural& s, const Natural& y);
/// From a formula, with its canonical building sequence.
SatWitness sat_witness(Scheme sc, const Formula& f, const Natural& y);

/// p_(x^2)^(2^(p_x^((x+1)^2)) * 3^(p_x^(p_x^((y+1)^2))) * 5)
ir::Expr sat_t_bound(const ir::Expr& x, const ir::Expr& y);

/// sat_seq(s, t), compiled literally.
const ir::Fn& satseq_fn(Scheme sc);
/// Sat(x, y): (E s <= p_x^((x+1)^2)) (E t <= sat_t_bound) (sat_seq(s, t) & last(s) = x & last(t) = <len(s) - 1, y, 1>).
const Compiled& sat_as_pr(Scheme sc);

Verdict3 satseq_check(Scheme sc, const Natural& s, const Natural& t, std::uint64_t budget);
/// Sat(x, y) for a valuation sequence y.
Verdict3 sat_pr(Scheme sc, const Natural& x, const Natural& y, std::uint64_t budget);
/// Sat(x, a) through the constant sequence.
Verdict3 sat_pr_value(Scheme sc, const Natural& x, const Natural& a, std::uint64_t budget);

struct Counterexample {
  Formula candidate;
  Formula diagonal;  // ~candidate(v0, v0)
  Natural m;         // code of the diagonal formula
  std::pair<Natural, Natural> point;
  Verdict3 candidate_value = Verdict3::Unknown;  // candidate(m, m)
  Verdict3 sat_value = Verdict3::Unknown;        // Sat(m, m)
};

/// The diagonal point at which a Delta0 candidate for Sat (free variables
/// among v0, v1) is wrong.
Counterexample falsify(const Formula& candidate, Scheme sc, std::uint64_t budget);

}  // namespace arith
