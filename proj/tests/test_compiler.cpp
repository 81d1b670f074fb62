#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arith/compiler.hpp"
#include "arith/eval.hpp"
#include "support.hpp"

using namespace arith;
using namespace arith::ir;

namespace {

// random Delta0 formulas over v0, v1 with numeral or variable bounds
struct Gen {
  std::mt19937 rng;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Term term(const std::vector<VarIndex>& scope, int depth) {
    const int k = pick(depth > 0 ? 5 : 3);
    if (k == 0) return numeral(static_cast<std::uint64_t>(pick(3)));
    if (k <= 2) return Term::var(scope[pick(static_cast<int>(scope.size()))]);
    Term a = term(scope, depth - 1), b = term(scope, depth - 1);
    return k == 3 ? Term::add(a, b) : Term::mul(a, b);
  }

  Formula formula(std::vector<VarIndex>& scope, int qdepth, int depth) {
    const int k = pick(depth > 0 ? (qdepth > 0 ? 8 : 6) : 2);
    switch (k) {
      case 0: return Formula::eq(term(scope, 1), term(scope, 1));
      case 1: return Formula::le(term(scope, 1), term(scope, 1));
      case 2: return Formula::negation(formula(scope, qdepth, depth - 1));
      case 3: {
        Formula a = formula(scope, qdepth, depth - 1);
        return Formula::implies(a, formula(scope, qdepth, depth - 1));
      }
      case 4: {
        Formula a = formula(scope, qdepth, depth - 1);
        return Formula::conj(a, formula(scope, qdepth, depth - 1));
      }
      case 5: {
        Formula a = formula(scope, qdepth, depth - 1);
        return Formula::disj(a, formula(scope, qdepth, depth - 1));
      }
      default: {
        const VarIndex v = static_cast<VarIndex>(2 + scope.size());
        Term b = pick(2) ? numeral(static_cast<std::uint64_t>(pick(7))) : Term::var(scope[pick(static_cast<int>(scope.size()))]);
        scope.push_back(v);
        Formula body = formula(scope, qdepth - 1, depth - 1);
        scope.pop_back();
        return k == 6 ? Formula::bforall(v, b, body) : Formula::bexists(v, b, body);
      }
    }
  }
};

BoxResult agreement(const Formula& f, bool parallel) {
  const Compiled c = compile(f, {0, 1});
  BoxPredicate agree = [&](const std::vector<Natural>& a) {
    const bool truth = eval_delta0(f, Valuation{{0, a[0]}, {1, a[1]}});
    return eval(c, a) == (truth ? 1 : 0);
  };
  return parallel ? box_check_parallel(2, 6, agree) : box_check_serial(2, 6, agree);
}

}  // namespace

TEST_CASE("compile examples") {
  const Compiled refl = compile(parse_formula("(v0 = v0)"), {0});
  CHECK(validate(refl.term) == 1);
  CHECK(eval(refl, {5}) == 1);
  const Compiled even = compile(parse_formula("(E v1 <= v0)(v0 = (v1 + v1))"), {0});
  CHECK(eval(even, {4}) == 1);
  CHECK(eval(even, {3}) == 0);
  // literal evaluation, no kernels
  CHECK(eval_pr(even.term, {4}) == 1);
  CHECK(eval_pr(even.term, {3}) == 0);
}

TEST_CASE("conjunction is the pointwise product") {
  const Formula a = parse_formula("(v0 <= v1)"), b = parse_formula("(E v2 <= v1)(v1 = (v2 + v2))");
  const Compiled ca = compile(a, {0, 1}), cb = compile(b, {0, 1}), cab = compile(Formula::conj(a, b), {0, 1});
  for (std::uint64_t x = 0; x <= 6; ++x)
    for (std::uint64_t y = 0; y <= 6; ++y) CHECK(eval(cab, {x, y}) == eval(ca, {x, y}) * eval(cb, {x, y}));
}

TEST_CASE("random Delta0 formulas agree with direct evaluation") {
  Gen g{std::mt19937(20261016)};
  std::uint64_t bad = 0;
  for (int i = 0; i < 150; ++i) {
    std::vector<VarIndex> scope{0, 1};
    const Formula f = g.formula(scope, 3, 5);
    const BoxResult r = agreement(f, i % 2 == 1);
    CHECK(r.checked == 49);
    if (r.mismatches) {
      ++bad;
      MESSAGE(print(f));
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(compile(parse_formula("(A v1)(v1 = v1)"), {0}), Error);
  CHECK_THROWS_AS(compile(parse_formula("(v0 = v3)"), {0}), Error);
  CHECK_THROWS_AS(compile(parse_formula("(v0 = v0)"), {}), Error);
  CHECK_THROWS_AS(compile(parse_formula("(E v1 <= v0)(v1 = v0)"), {0}, {{0, stdlib("add")}}), ArityError);
  CHECK_THROWS_AS(compile(parse_formula("(E v1 <= v0)(v1 = v0)"), {0}, {{3, stdlib("sg")}}), Error);
  CHECK_THROWS_AS(F("add", {V("x")}), ArityError);
}

TEST_CASE("PR bounds replace term bounds") {
  // (E v1 <= sg(v0)) (v0 = v1 + v1)
  const Compiled c = compile(parse_formula("(E v1 <= v0)(v0 = (v1 + v1))"), {0}, {{0, stdlib("sg")}});
  CHECK(eval(c, {0}) == 1);
  CHECK(eval(c, {2}) == 1);
  CHECK(eval(c, {4}) == 0);
  // inner quantifier sees v0 and v1
  const Compiled d = compile(parse_formula("(A v1 <= v0)(E v2 <= v0)(v2 = v1)"), {0}, {{1, stdlib("add")}});
  CHECK(eval(d, {3}) == 1);
}

TEST_CASE("hooked searches") {
  const Expr huge = F("pow", {K(2), F("pow", {K(2), K(40)})});
  auto triple_of = [](const Env& e) { return std::vector<Natural>{e.get("x") * 3}; };
  const Compiled ex = compile(Rel::exists("i", huge, Rel::eq(V("i"), F("mul", {V("x"), K(3)})), false, triple_of), {"x"});
  CHECK(eval(ex, {7}) == 1);
  const Compiled none = compile(Rel::exists("i", huge, Rel::eq(V("i"), F("mul", {V("x"), K(5)})), false, triple_of), {"x"});
  CHECK(eval(none, {7}) == 0);

  // strictness and bounds are exact
  auto self = [](const Env& e) { return std::vector<Natural>{e.get("x")}; };
  const Compiled lt = compile(Rel::exists("i", V("x"), Rel::eq(V("i"), V("x")), true, self), {"x"});
  const Compiled le = compile(Rel::exists("i", V("x"), Rel::eq(V("i"), V("x")), false, self), {"x"});
  CHECK(eval(lt, {4}) == 0);
  CHECK(eval(le, {4}) == 1);
  // hooked and literal evaluation agree on small inputs
  for (std::uint64_t x = 0; x <= 5; ++x) {
    CHECK(eval_pr(lt.term, {x}) == 0);
    CHECK(eval_pr(le.term, {x}) == 1);
  }

  // forall: candidates are potential counterexamples
  auto next = [](const Env& e) { return std::vector<Natural>{e.get("x") + 1}; };
  const Compiled all = compile(Rel::forall("i", huge, Rel::negation(Rel::eq(V("i"), F(Fn{PRTerm::succ(), nullptr, "succ"}, {V("x")}))), false, next), {"x"});
  CHECK(eval(all, {3}) == 0);
  const Compiled all2 = compile(Rel::forall("i", huge, Rel::le(V("i"), F("pow", {V("i"), K(2)})), false, next), {"x"});
  CHECK(eval(all2, {3}) == 1);

  // a hooked relation reused inside another expression keeps its hooks
  const Fn f = as_fn("ex", compile(Rel::exists("i", huge, Rel::eq(V("i"), F("mul", {V("x"), K(3)})), false, triple_of), {"x"}));
  const Compiled outer = compile(Rel::conj({Rel::atom(F(f, {V("y")})), Rel::le(V("y"), K(10))}), {"y"});
  CHECK(eval(outer, {9}) == 1);
  CHECK(eval(outer, {11}) == 0);
}
