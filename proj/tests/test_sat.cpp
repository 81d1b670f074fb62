#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arith/sat.hpp"
#include "support.hpp"

using namespace arith;

namespace {

constexpr std::uint64_t kBudget = 50'000'000;
const Scheme C = Scheme::Compact;
const Scheme P = Scheme::Paper;

const std::vector<std::string> kFormulas = {"(0 = 0)",
                                            "(v0 = v0)",
                                            "~(v0 = 1)",
                                            "(v0 <= (v0 + 1))",
                                            "((v0 = 1) -> (v1 <= v0))",
                                            "(A v1 <= v0)(v1 <= v0)",
                                            "(E v1 <= v0)(v0 = (v1 + v1))",
                                            "(A v1 <= (1 + 1))~(v0 = (v1 * v1))",
                                            "((v0 = 0) | (E v2 <= v0)(v0 = (v2 + 1)))"};

// truth with every free variable set to a, straight from the parsed formula
bool oracle(const Formula& f, const Natural& a) {
  Valuation rho;
  for (VarIndex v : free_vars(f)) rho[v] = a;
  return eval_delta0(f, rho);
}

struct Gen {
  std::mt19937 rng;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
  Term term(int depth) {
    const int k = pick(depth > 0 ? 5 : 3);
    if (k == 0) return Term::one();
    if (k <= 2) return Term::var(static_cast<VarIndex>(pick(2)));
    Term a = term(depth - 1), b = term(depth - 1);
    return k == 3 ? Term::add(a, b) : Term::mul(a, b);
  }
  Formula formula(int depth) {
    switch (pick(depth > 0 ? 5 : 2)) {
      case 0: return Formula::eq(term(1), term(1));
      case 1: return Formula::le(term(1), term(1));
      case 2: return Formula::negation(formula(depth - 1));
      case 3: {
        Formula a = formula(depth - 1);
        return Formula::implies(a, formula(depth - 1));
      }
      default: return Formula::bexists(2, Term::var(static_cast<VarIndex>(pick(2))), Formula::eq(Term::var(2), term(0)));
    }
  }
};

}  // namespace

TEST_CASE("sat_direct") {
  for (Scheme s : {C, P}) {
    CHECK(sat_direct(s, encode(s, parse_formula("(v0 <= (v0 + 1))")), 5));
    CHECK_FALSE(sat_direct(s, encode(s, parse_formula("~(v0 = v0)")), 0));
  }
  CHECK(sat_direct(C, encode(C, parse_formula("(E v1 <= v0)(v0 = (v1 + v1))")), 6));
  CHECK_FALSE(sat_direct(C, encode(C, parse_formula("(E v1 <= v0)(v0 = (v1 + v1))")), 7));
  CHECK_THROWS_AS(sat_direct(C, encode(C, parse_term("(v0 + 1)")), 0), DecodeError);
  CHECK_THROWS_AS(sat_direct(C, 5, 0), DecodeError);

  for (const auto& text : kFormulas) {
    const Formula f = parse_formula(text);
    const Natural x = encode(C, f);
    for (unsigned a = 0; a <= 20; ++a) {
      CAPTURE(text);
      CAPTURE(a);
      CHECK(sat_direct(C, x, a) == oracle(f, a));
    }
  }
}

TEST_CASE("constant valuations") {
  CHECK(constant_valuation(C, parse_formula("(0 = 0)"), 4) == 12);
  CHECK(constant_valuation(P, parse_formula("(v0 = v2)"), 4) == test::seq_code({4, 4, 4}));
  // bound variables are covered too
  CHECK(constant_valuation(P, parse_formula("(A v1 <= 1)(v1 = v1)"), 0) == test::seq_code({0, 0}));
}

TEST_CASE("satseq_check") {
  // s = <(v0 = v0)>, t = <<0, <3>, 1>>
  const Natural s = seq_encode(C, {encode(C, parse_formula("(v0 = v0)"))});
  CHECK(s == canonical_buildseq(C, parse_formula("(v0 = v0)")));
  const Natural y = seq_encode(C, {3});
  CHECK(satseq_check(C, s, seq_encode(C, {triple(C, 0, y, 1)}), kBudget) == Verdict3::True);
  CHECK(satseq_check(C, s, seq_encode(C, {triple(C, 0, y, 0)}), kBudget) == Verdict3::False);
  CHECK(satseq_check(C, seq_encode(C, {encode(C, parse_term("v0"))}), seq_encode(C, {triple(C, 0, y, 1)}), kBudget) ==
        Verdict3::False);
  CHECK(satseq_check(C, s, 7, kBudget) == Verdict3::False);
  CHECK(satseq_check(C, s, seq_encode(C, {}), kBudget) == Verdict3::True);  // no triples, nothing to check

  // paper codes spelled out: (0 = 0) = 2 * 2^10 3^2 5^2 + 1, <> = 1, <0, <>, 1> = 3 * 5
  CHECK(encode(P, parse_formula("(0 = 0)")) == 460801);
  CHECK(satseq_check(P, test::seq_code({460801}), test::seq_code({15}), kBudget) == Verdict3::True);
  CHECK(satseq_check(P, test::seq_code({460801}), test::seq_code({3}), kBudget) == Verdict3::False);
  // (1 = 0) is false: <0, <>, 0> = 3
  CHECK(satseq_check(P, test::seq_code({encode(P, parse_formula("(1 = 0)")).get_ui()}), test::seq_code({3}), kBudget) ==
        Verdict3::True);
}

TEST_CASE("witness sequences are accepted, corruptions rejected") {
  for (const auto& text : kFormulas) {
    CAPTURE(text);
    const Formula f = parse_formula(text);
    for (unsigned a : {0u, 3u}) {
      const SatWitness w = sat_witness(C, f, constant_valuation(C, f, a));
      CHECK(w.truth == oracle(f, a));
      CHECK(satseq_check(C, w.s, w.t, kBudget) == Verdict3::True);
      if (a != 0) continue;
      const std::size_t n = seq_len(C, w.s);
      for (std::size_t p = 0; p < w.triples.size(); ++p) {
        auto flip = w.triples, out_of_range = w.triples;
        flip[p][2] = 1 - flip[p][2];
        out_of_range[p][0] = n;
        for (const auto& bad : {flip, out_of_range}) {
          std::vector<Natural> codes;
          for (const auto& [i, z, tv] : bad) codes.push_back(triple(C, i, z, tv));
          CHECK(satseq_check(C, w.s, seq_encode(C, codes), kBudget) == Verdict3::False);
        }
        std::vector<Natural> codes;
        for (const auto& [i, z, tv] : w.triples) codes.push_back(triple(C, i, z, tv));
        codes[p] = 0;  // not a triple
        CHECK(satseq_check(C, w.s, seq_encode(C, codes), kBudget) == Verdict3::False);
      }
    }
  }
}

TEST_CASE("Sat as a PR term") {
  CHECK(validate(sat_as_pr(C).term) == 2);
  CHECK(validate(sat_as_pr(P).term) == 2);
  for (Scheme s : {C, P}) {
    CHECK(contains(sat_as_pr(s).term, syntax_defs(s).trmseq.term));
    CHECK(contains(sat_as_pr(s).term, syntax_defs(s).valseq.term));
    CHECK(contains(sat_as_pr(s).term, syntax_defs(s).fml_seq.term));
  }
  // smallest instance: (0 = 0) is the bytes 6 2 2, the empty valuation the byte 12
  CHECK(sat_pr(C, 393730, 12, kBudget) == verdict(sat_direct(C, 393730, 0)));
  CHECK(sat_pr(C, 393730, 12, kBudget) == Verdict3::True);
  // not the last triple's valuation
  CHECK(sat_pr(C, 393730, 7, kBudget) == Verdict3::False);
  CHECK(sat_pr(C, encode(C, parse_term("v0")), 12, kBudget) == Verdict3::False);
  CHECK(sat_pr(C, 393730, 12, 100) == Verdict3::Unknown);
}

TEST_CASE("sequence form agrees with sat_direct on constant valuations") {
  for (const auto& text : kFormulas) {
    const Formula f = parse_formula(text);
    const Natural x = encode(C, f);
    for (unsigned a = 0; a <= 3; ++a) {
      CAPTURE(text);
      CAPTURE(a);
      CHECK(sat_pr_value(C, x, a, kBudget) == verdict(oracle(f, a)));
    }
  }
  for (const char* text : {"(0 = 0)", "(1 = 0)", "(v0 = 0)"}) {
    const Formula f = parse_formula(text);
    for (unsigned a = 0; a <= 1; ++a) CHECK(sat_pr_value(P, encode(P, f), a, kBudget) == verdict(oracle(f, a)));
  }
  // a valuation sequence that is not constant
  const Natural x = encode(C, parse_formula("(v0 <= v1)"));
  CHECK(sat_pr(C, x, seq_encode(C, {1, 2}), kBudget) == Verdict3::True);
  CHECK(sat_pr(C, x, seq_encode(C, {2, 1}), kBudget) == Verdict3::False);
}

TEST_CASE("falsify") {
  const auto check = [](const char* candidate, const char* diagonal, Verdict3 cv, Verdict3 sv) {
    const Counterexample ce = falsify(parse_formula(candidate), C, 1'000'000);
    CHECK(print(ce.diagonal) == print(parse_formula(diagonal)));
    CHECK(ce.m == encode(C, parse_formula(diagonal)));
    CHECK(ce.point == std::pair{ce.m, ce.m});
    CHECK(ce.candidate_value == cv);
    CHECK(ce.sat_value == sv);
  };
  check("(v0 = v0)", "~(v0 = v0)", Verdict3::True, Verdict3::False);
  check("~(v0 = v0)", "~~(v0 = v0)", Verdict3::False, Verdict3::True);
  check("(v0 <= v1)", "~(v0 <= v0)", Verdict3::True, Verdict3::False);
  // v0 bound in the candidate is renamed before substituting
  const Counterexample ce = falsify(parse_formula("(E v0 <= (1 + 1))(v0 = v1)"), C, 1'000'000);
  CHECK(print(ce.diagonal) == print(parse_formula("~(E v2 <= (1 + 1))(v2 = v0)")));
  CHECK(ce.candidate_value == Verdict3::False);
  CHECK(ce.sat_value == Verdict3::True);
  // searches up to m do not fit the budget
  const Counterexample big = falsify(parse_formula("(E v2 <= v0)(v1 = (v2 + v2))"), C, 1000);
  CHECK(big.candidate_value == Verdict3::Unknown);
  CHECK(big.sat_value == Verdict3::Unknown);

  CHECK_THROWS_AS(falsify(parse_formula("(v0 = v2)"), C, 10), Error);
  CHECK_THROWS_AS(falsify(parse_formula("(A v2)(v0 = v2)"), C, 10), Error);
}

TEST_CASE("falsifier soundness on random candidates") {
  Gen g{std::mt19937(20261016)};
  int decided = 0;
  for (int n = 0; n < 200; ++n) {
    const Formula f = g.formula(3);
    const Counterexample ce = falsify(f, C, 100'000);
    if (ce.candidate_value == Verdict3::Unknown || ce.sat_value == Verdict3::Unknown) continue;
    ++decided;
    CAPTURE(print(f));
    CHECK(ce.candidate_value != ce.sat_value);
  }
  CHECK(decided >= 100);
}
