#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "arith/represent.hpp"

using namespace arith;

namespace {

Formula F(const char* s) { return parse_formula(s); }

const Formula kDouble = F("(v1 = (v0 + v0))");

std::map<Natural, Natural> doubling(unsigned top) {
  std::map<Natural, Natural> f;
  for (unsigned n = 0; n <= top; ++n) f[n] = 2 * n;
  return f;
}

bool holds(const Formula& f, std::uint64_t x, std::uint64_t y) {
  return eval_delta0(f, {{0, nat(x)}, {1, nat(y)}});
}

// a sound mock that decides every phi(n, m) on the table, plus the true
// uniqueness sentences; indices shuffled
TheoryOracle deciding_mock(const Formula& phi, const RepTable& t, std::mt19937& rng) {
  std::vector<Formula> thms;
  for (const auto& [n, fn] : t.function) {
    for (Natural m = 0; m <= t.m_max; ++m) {
      const Formula i = instance(phi, n, m);
      thms.push_back(eval_truncated(i, {}, 40) ? i : Formula::negation(i));
    }
    const Formula at = instance(phi, n);
    VarIndex a = 1;
    for (VarIndex u : all_vars(phi)) a = std::max(a, u);
    const VarIndex y = a + 1, z = a + 2;
    const Formula uniq = Formula::uforall(
        y, Formula::uforall(z, Formula::implies(Formula::conj(substitute(at, 1, Term::var(y)), substitute(at, 1, Term::var(z))),
                                                Formula::eq(Term::var(y), Term::var(z)))));
    if (eval_truncated(uniq, {}, 40)) thms.push_back(uniq);
  }
  std::shuffle(thms.begin(), thms.end(), rng);
  std::map<Natural, Formula> table;
  for (std::size_t i = 0; i < thms.size(); ++i) table.emplace(nat(i), thms[i]);
  return mock_oracle(table, "sound, decides the instances");
}

std::map<Natural, Formula> square_theory(unsigned top, const Formula& phi) {
  std::map<Natural, Formula> t;
  for (unsigned n = 0; n <= top; ++n) t.emplace(nat(n), instance(phi, n, nat(n) * n));
  return t;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("check_representation examples") {
  const TheoryOracle truth = truth_oracle(50);
  const RepTable f = function_table(doubling(5));
  CHECK(f.m_max == 11);

  const RepReport weak = check_representation(RepMode::FunWeak, kDouble, f, truth, 50);
  CHECK(weak.overall == Outcome::Pass);
  CHECK(weak.instances.size() == 6 * 12);
  CHECK(check_representation(RepMode::FunRep, kDouble, f, truth, 50).overall == Outcome::Pass);

  const RepTable empty = relation_table({0, 1, 2}, {});
  const RepReport rel = check_representation(RepMode::RelWeak, F("(v0 = v0)"), empty, truth, 50);
  CHECK(rel.overall == Outcome::Fail);
  CHECK(rel.instances[0].verdict == Verdict3::False);

  const RepTable evens = relation_table({0, 1, 2, 3, 4}, {0, 2, 4});
  const Formula even = F("(E v1 <= v0)(v0 = (v1 + v1))");
  CHECK(check_representation(RepMode::RelWeak, even, evens, truth, 50).overall == Outcome::Pass);
  CHECK(check_representation(RepMode::RelRep, even, evens, truth, 50).overall == Outcome::Pass);
  CHECK(check_representation(RepMode::RelRep, F("(v0 <= (1 + 1))"), evens, truth, 50).overall == Outcome::Fail);

  CHECK(check_representation(RepMode::FunStrong, kDouble, f, truth, 50).overall == Outcome::Pass);
  CHECK(check_representation(RepMode::FunStrong, F("(v1 <= (v0 + v0))"), f, truth, 50).overall == Outcome::Fail);
  CHECK(check_representation(RepMode::FunProvTotal, kDouble, f, truth, 30).overall == Outcome::Fail);

  const std::string text = to_string(weak);
  CHECK(text.find("mode: FunWeak") != std::string::npos);
  CHECK(text.find("overall: pass") != std::string::npos);
}

TEST_CASE("check_representation errors") {
  const TheoryOracle truth = truth_oracle(10);
  const RepTable f = function_table(doubling(2));
  CHECK_THROWS_AS(check_representation(RepMode::FunWeak, F("(v2 = v0)"), f, truth, 10), Error);
  CHECK_THROWS_AS(check_representation(RepMode::RelWeak, kDouble, relation_table({0}, {}), truth, 10), Error);
  CHECK_THROWS_AS(check_representation(RepMode::FunWeak, kDouble, f, truth, 0), Error);
  CHECK_THROWS_AS(truth_oracle(0), Error);
  CHECK_THROWS_AS(parse_repmode("Weak"), Error);
  CHECK(parse_repmode("FunProvTotal") == RepMode::FunProvTotal);
}

TEST_CASE("provability on mock theories") {
  const TheoryOracle t = mock_oracle({{nat(0), F("(0 = 0)")}, {nat(5), F("(1 = 1)")}});
  CHECK(t.proof_check(0, F("(0 = 0)")));
  CHECK_FALSE(t.proof_check(5, F("(0 = 0)")));
  CHECK_FALSE(t.proof_check(3, F("(0 = 0)")));
  CHECK(t.enumerator(5) == std::optional<Formula>(F("(1 = 1)")));
  CHECK_FALSE(t.enumerator(4).has_value());
  CHECK(provable(t, F("(1 = 1)"), 1) == Verdict3::True);
  CHECK(provable(t, F("(0 = 1)"), 1) == Verdict3::False);
  CHECK(unprovable(t, F("(0 = 1)"), 1) == Verdict3::True);

  // without decides or find_proof only the scan is available
  TheoryOracle scan = t;
  scan.decides = nullptr;
  scan.find_proof = nullptr;
  CHECK(provable(scan, F("(1 = 1)"), 4) == Verdict3::Unknown);
  CHECK(provable(scan, F("(1 = 1)"), 5) == Verdict3::True);
  CHECK(unprovable(scan, F("(0 = 1)"), 100) == Verdict3::Unknown);
}

TEST_CASE("make_oracle") {
  const std::string thy = write_temp("rep_thy.tsv", "# theory\n0\t(0 = 0)\n\n7\t~(0 = 1)\n");
  const TheoryOracle m = make_oracle("mock:" + thy);
  CHECK(m.kind == "mock");
  CHECK(m.proof_check(0, F("(0 = 0)")));
  CHECK(m.proof_check(7, F("~(0 = 1)")));
  CHECK_FALSE(m.proof_check(5, F("(0 = 0)")));

  const TheoryOracle tr = make_oracle("truth:50");
  CHECK(provable(tr, F("(0 = 0)"), 50) == Verdict3::True);
  CHECK(provable(tr, F("(0 = 1)"), 50) == Verdict3::False);
  CHECK(provable(tr, F("(v0 = v0)"), 50) == Verdict3::False);
  const Natural k = *tr.find_proof(F("(0 = 0)"));
  CHECK(k == 393730);
  CHECK(tr.proof_check(k, F("(0 = 0)")));
  CHECK(tr.enumerator(k) == std::optional<Formula>(F("(0 = 0)")));
  CHECK_FALSE(tr.enumerator(12).has_value());

  CHECK_THROWS_AS(make_oracle("mock:/nonexistent/file"), Error);
  CHECK_THROWS_AS(make_oracle("mock:" + write_temp("bad1.tsv", "0 (0 = 0)\n")), Error);
  CHECK_THROWS_AS(make_oracle("mock:" + write_temp("bad2.tsv", "x\t(0 = 0)\n")), Error);
  CHECK_THROWS_AS(make_oracle("mock:" + write_temp("bad3.tsv", "0\t(0 = \n")), Error);
  CHECK_THROWS_AS(make_oracle("mock:" + write_temp("bad4.tsv", "0\t(0 = 0)\n0\t(1 = 1)\n")), Error);
  CHECK_THROWS_AS(make_oracle("truth:0"), Error);
  CHECK_THROWS_AS(make_oracle("zfc"), Error);
}

TEST_CASE("tables") {
  const RepTable f = parse_table("0\t0\n1\t2\n3\t6\n", true);
  CHECK(f.function.size() == 3);
  CHECK(f.m_max == 7);
  const RepTable r = parse_table("0\t1\n1\t0\n2\t1\n", false);
  CHECK(r.domain.size() == 3);
  CHECK(r.members == std::set<Natural>{0, 2});
  CHECK_THROWS_AS(parse_table("0\t2\n", false), Error);
  CHECK_THROWS_AS(parse_table("0\t1\n0\t2\n", true), Error);
  CHECK_THROWS_AS(parse_table("0,1\n", true), Error);
}

TEST_CASE("strengthen examples") {
  const Formula th = strengthen(kDouble);
  CHECK(is_delta0(th));
  CHECK(holds(th, 2, 4));
  CHECK_FALSE(holds(th, 2, 5));

  const Formula le = strengthen(F("(v0 <= v1)"));
  for (std::uint64_t y = 0; y <= 10; ++y) CHECK(holds(le, 3, y) == (y == 3));

  const Formula never = strengthen(F("(0 = 1)"));
  for (std::uint64_t x = 0; x <= 4; ++x)
    for (std::uint64_t y = 0; y <= 4; ++y) CHECK_FALSE(holds(never, x, y));

  CHECK_THROWS_AS(strengthen(F("(v2 = v0)")), Error);
}

TEST_CASE("strengthen keeps the least witness") {
  // n mod 3, or y = n once n >= 3
  const Formula th = strengthen(parse_formula("((E v2 <= v0)((v0 = ((v2 * (1 + (1 + 1))) + v1)) & (v1 <= (1 + 1))) | "
                                              "((v1 = v0) & ((1 + (1 + 1)) <= v1)))"));
  for (std::uint64_t n = 0; n <= 12; ++n) {
    // least y with the disjunction true, found by brute force on the native reading
    std::uint64_t least = 0;
    for (;; ++least) {
      const bool mod = least <= 2 && n % 3 == least;
      const bool big = least == n && least >= 3;
      if (mod || big) break;
    }
    for (std::uint64_t y = 0; y <= 15; ++y) CHECK(holds(th, n, y) == (y == least));
  }
}

TEST_CASE("totalize examples") {
  const Formula eta = totalize(strengthen(kDouble));
  CHECK_FALSE(is_delta0(eta));
  CHECK(eval_truncated(instance(eta, 3, 6), {}, 7));
  CHECK(eval_truncated(instance(eta, 3, 6), {}, 20));
  CHECK_FALSE(eval_truncated(instance(eta, 3, 5), {}, 20));
  CHECK_FALSE(eval_truncated(instance(eta, 3, 0), {}, 20));

  const Formula all = totalize(F("(v0 = v0)"));
  for (std::uint64_t y = 0; y <= 4; ++y) CHECK(eval_truncated(instance(all, 2, y), {}, 10) == (y == 0));

  const Formula none = totalize(F("(0 = 1)"));
  CHECK(eval_truncated(instance(none, 5, 0), {}, 10));
  CHECK_FALSE(eval_truncated(instance(none, 5, 1), {}, 10));

  CHECK_THROWS_AS(totalize(F("(v3 = v0)")), Error);
}

TEST_CASE("strengthen and totalize correctness") {
  // representing formulas of total functions, each with the function itself
  const std::vector<std::pair<Formula, std::function<std::uint64_t(std::uint64_t)>>> cases = {
      {kDouble, [](std::uint64_t n) { return 2 * n; }},
      {F("(v1 = (v0 * v0))"), [](std::uint64_t n) { return n * n; }},
      {F("((v0 <= v1) & (v1 <= v0))"), [](std::uint64_t n) { return n; }},
      {F("(v1 = (v0 + 1))"), [](std::uint64_t n) { return n + 1; }},
  };
  const std::uint64_t bound = 30, budget = 40;
  for (const auto& [psi, f] : cases) {
    CAPTURE(print(psi));
    const Formula th = strengthen(psi);
    const Formula eta = totalize(th);
    for (std::uint64_t n = 0; n <= 5; ++n) {
      CHECK(holds(th, n, f(n)));
      for (std::uint64_t y = 0; y <= bound; ++y)
        if (holds(th, n, y)) CHECK(y == f(n));
      CHECK(eval_truncated(instance(eta, n, f(n)), {}, budget));
      std::uint64_t witnesses = 0;
      for (std::uint64_t y = 0; y <= bound; ++y) witnesses += eval_truncated(instance(eta, n, y), {}, budget);
      CHECK(witnesses == 1);
    }
  }
}

TEST_CASE("ladder") {
  std::mt19937 rng(7);
  const RepTable f = function_table(doubling(3));
  const std::vector<Formula> phis = {kDouble, F("(v1 <= (v0 + v0))"), F("((v1 = (v0 + v0)) | (v1 = 0))"),
                                     F("~(v1 = v0)"), F("((v0 + v0) <= v1)"), strengthen(F("((v0 + v0) <= v1)"))};
  int strong_passes = 0;
  for (const auto& phi : phis) {
    CAPTURE(print(phi));
    for (int round = 0; round < 3; ++round) {
      const TheoryOracle t = deciding_mock(phi, f, rng);
      const auto pass = [&](RepMode m) { return check_representation(m, phi, f, t, 100).overall == Outcome::Pass; };
      const bool weak = pass(RepMode::FunWeak), rep = pass(RepMode::FunRep), strong = pass(RepMode::FunStrong);
      if (rep) CHECK(weak);
      if (strong) CHECK(rep);
      strong_passes += strong;
    }
  }
  CHECK(strong_passes >= 6);

  // provably total implies strong, on the truth oracle
  const TheoryOracle truth = truth_oracle(10);
  int total_passes = 0;
  for (const auto& phi : phis) {
    const Formula eta = totalize(strengthen(phi));
    const bool total = check_representation(RepMode::FunProvTotal, eta, f, truth, 10).overall == Outcome::Pass;
    if (total) {
      CHECK(check_representation(RepMode::FunStrong, eta, f, truth, 10).overall == Outcome::Pass);
      ++total_passes;
    }
  }
  CHECK(total_passes >= 1);
}

TEST_CASE("rosserize examples") {
  const Formula phi = F("(v1 = (v0 * v0))");
  const Rosser psi = rosserize(phi, mock_oracle(square_theory(10, phi)));
  CHECK(psi.holds(3, 9, 100) == Verdict3::True);
  CHECK(psi.holds(3, 5, 100) == Verdict3::False);
  CHECK(psi.holds(3, 9, 2) == Verdict3::Unknown);
  CHECK(psi.display().find("rho(z, ") != std::string::npos);

  const Rosser deg = rosserize(phi, mock_oracle({{nat(0), instance(phi, 0, 0)}, {nat(1), instance(phi, 0, 1)}}));
  CHECK(deg.holds(0, 1, 10) == Verdict3::False);
  CHECK(deg.holds(0, 0, 10) == Verdict3::True);

  // the earlier proof wins even when the later one is the true instance
  const Rosser swapped = rosserize(phi, mock_oracle({{nat(6), instance(phi, 2, 5)}, {nat(7), instance(phi, 2, 4)}}));
  CHECK(swapped.holds(2, 5, 10) == Verdict3::True);
  CHECK(swapped.holds(2, 4, 10) == Verdict3::False);

  // competitors are only looked for among y' <= z: a proof index below the
  // value it mentions escapes, and both instances hold
  const Rosser low = rosserize(phi, mock_oracle({{nat(0), instance(phi, 2, 5)}, {nat(1), instance(phi, 2, 4)}}));
  CHECK(low.holds(2, 5, 10) == Verdict3::True);
  CHECK(low.holds(2, 4, 10) == Verdict3::True);

  CHECK_THROWS_AS(rosserize(F("(v2 = v0)"), mock_oracle({})), Error);
}

TEST_CASE("rosserized predicate represents the function") {
  const Formula phi = F("(v1 = (v0 * v0))");
  const Rosser psi = rosserize(phi, mock_oracle(square_theory(10, phi)));
  std::map<Natural, Natural> sq;
  for (unsigned n = 0; n <= 10; ++n) sq[n] = n * n;
  const RepTable t = function_table(sq);
  const RepReport r = check_representation(RepMode::FunRep, psi, t, 100);
  CHECK(r.overall == Outcome::Pass);
  CHECK(r.instances.size() == 11 * 102);
  CHECK(check_representation(RepMode::FunWeak, psi, t, 100).overall == Outcome::Pass);
  CHECK(check_representation(RepMode::FunRep, psi, t, 5).overall == Outcome::Inconclusive);
  CHECK_THROWS_AS(check_representation(RepMode::FunStrong, psi, t, 100), Error);
}

TEST_CASE("rosser tie-break on random theories") {
  // indices exceed the values in the theorems they prove, as codes of real proofs do
  std::mt19937 rng(11);
  const Formula phi = F("(v1 = (v0 + 1))");
  for (int round = 0; round < 60; ++round) {
    std::map<Natural, Formula> table;
    const int size = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < size; ++i) {
      const unsigned n = rng() % 4, m = rng() % 5;
      table.emplace(nat(m + 1 + rng() % 20), instance(phi, n, m));
    }
    const Rosser psi = rosserize(phi, mock_oracle(table));
    for (unsigned n = 0; n < 4; ++n) {
      int count = 0;
      for (unsigned m = 0; m < 6; ++m) count += psi.holds(n, m, 40) == Verdict3::True;
      CHECK(count <= 1);
    }
  }
}

TEST_CASE("rosser on the truth oracle") {
  // proof indices are compact codes, so small budgets leave it undecided
  const Formula phi = F("(v1 = (v0 + v0))");
  const Rosser psi = rosserize(phi, truth_oracle(20));
  CHECK(psi.holds(1, 3, 10) == Verdict3::False);
  CHECK(psi.holds(1, 2, 10) == Verdict3::Unknown);
}
