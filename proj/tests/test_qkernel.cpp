#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "arith/eval.hpp"
#include "arith/qkernel.hpp"
#include "arith/represent.hpp"
#include "qsupport.hpp"

using namespace arith;

namespace {

Formula F(const char* s) { return parse_formula(s); }

QProof leaf(QRule r, const char* c) { return QProof{r, F(c)}; }

auto grid(std::uint64_t top) { return test::schema_grid(top); }
auto mutants(const QProof& p) { return test::proof_mutants(p); }

}  // namespace

TEST_CASE("axioms") {
  CHECK(q_axiom(4) == F("(A v0)((v0 + 0) = v0)"));
  CHECK(q_axiom(1) == F("(A v0)~((v0 + 1) = 0)"));
  CHECK(q_axiom(9) == F("(1 = (0 + 1))"));
  CHECK(q_axiom(8) == F("(A v0)(A v1)(((v0 <= v1) -> (E v2)((v2 + v0) = v1)) & ((E v2)((v2 + v0) = v1) -> (v0 <= v1)))"));
  for (int i = 1; i <= kQAxioms; ++i) CHECK(free_vars(q_axiom(i)).empty());
  CHECK_THROWS_AS(q_axiom(0), Error);
  CHECK_THROWS_AS(q_axiom(10), Error);

  QProof q4{QRule::AX, q_axiom(4)};
  q4.axiom = 4;
  CHECK(check_proof(q4).valid);
  q4.axiom = 5;
  CHECK_FALSE(check_proof(q4).valid);
}

TEST_CASE("rule instances") {
  CHECK(check_proof(leaf(QRule::TAUT, "((0 = 1) -> ((0 = 1) | (1 = 0)))")).valid);
  CHECK(check_proof(leaf(QRule::TAUT, "((A v0)(v0 = v0) | ~(A v0)(v0 = v0))")).valid);
  CHECK_FALSE(check_proof(leaf(QRule::TAUT, "((0 = 1) -> (1 = 0))")).valid);
  CHECK_FALSE(check_proof(leaf(QRule::TAUT, "(0 = 0)")).valid);

  QProof inst = leaf(QRule::INST, "((A v0)(v0 <= v1) -> ((1 + 1) <= v1))");
  inst.term = parse_term("(1 + 1)");
  CHECK(check_proof(inst).valid);
  inst.term = parse_term("1");
  CHECK_FALSE(check_proof(inst).valid);
  QProof capture = leaf(QRule::INST, "((A v0)(E v1)(v0 = v1) -> (E v1)(v1 = v1))");
  capture.term = Term::var(1);
  CHECK_FALSE(check_proof(capture).valid);

  QProof ex = leaf(QRule::EXINTRO, "((0 = 0) -> (E v3)(v3 = 0))");
  ex.term = Term::zero();
  CHECK(check_proof(ex).valid);

  CHECK(check_proof(leaf(QRule::DIST, "((A v0)((v0 = 0) -> (0 = v0)) -> ((A v0)(v0 = 0) -> (A v0)(0 = v0)))")).valid);
  CHECK_FALSE(check_proof(leaf(QRule::DIST, "((A v0)((v0 = 0) -> (0 = v0)) -> ((A v1)(v0 = 0) -> (A v0)(0 = v0)))")).valid);
  CHECK(check_proof(leaf(QRule::VACUOUS, "((v1 = 0) -> (A v0)(v1 = 0))")).valid);
  CHECK_FALSE(check_proof(leaf(QRule::VACUOUS, "((v0 = 0) -> (A v0)(v0 = 0))")).valid);
  CHECK(check_proof(leaf(QRule::BDEF, "(((A v1 <= v0)(v1 = v1) -> (A v1)((v1 <= v0) -> (v1 = v1))) & "
                                      "((A v1)((v1 <= v0) -> (v1 = v1)) -> (A v1 <= v0)(v1 = v1)))"))
            .valid);
  CHECK(check_proof(leaf(QRule::BDEF, "(((E v1 <= 1)(v1 = 0) -> (E v1)((v1 <= 1) & (v1 = 0))) & "
                                      "((E v1)((v1 <= 1) & (v1 = 0)) -> (E v1 <= 1)(v1 = 0)))"))
            .valid);
  CHECK(check_proof(leaf(QRule::REFL, "((v0 + 1) = (v0 + 1))")).valid);
  CHECK_FALSE(check_proof(leaf(QRule::REFL, "((v0 + 1) = (1 + v0))")).valid);

  QProof eq = leaf(QRule::EQSUBST, "((v0 = 1) -> ((v0 <= v2) -> (1 <= v2)))");
  eq.var = 5;
  eq.shape = F("(v5 <= v2)");
  CHECK(check_proof(eq).valid);
  eq.shape = F("(v5 <= v5)");
  CHECK_FALSE(check_proof(eq).valid);

  // EXELIM with the variable free in the consequent
  QProof taut = leaf(QRule::TAUT, "((v3 = 0) -> ((v3 = 0) | (0 = 0)))");
  QProof gen = leaf(QRule::GEN, "(A v3)((v3 = 0) -> ((v3 = 0) | (0 = 0)))");
  gen.children.push_back(taut);
  QProof el = leaf(QRule::EXELIM, "((E v3)(v3 = 0) -> ((v3 = 0) | (0 = 0)))");
  el.children.push_back(gen);
  const auto bad = check_proof(el);
  CHECK_FALSE(bad.valid);
  CHECK(bad.path.empty());
}

TEST_CASE("modus ponens with mismatched antecedent is reported at that node") {
  QProof a = leaf(QRule::REFL, "(0 = 0)");
  QProof ab = leaf(QRule::TAUT, "((1 = 1) -> ((1 = 1) | (0 = 1)))");
  QProof mp = leaf(QRule::MP, "((1 = 1) | (0 = 1))");
  mp.children = {a, ab};
  QProof g = leaf(QRule::GEN, "(A v0)((1 = 1) | (0 = 1))");
  g.children = {mp};
  const auto r = check_proof(g);
  CHECK_FALSE(r.valid);
  CHECK(r.path == std::vector<std::size_t>{0});
  CHECK(r.reason.find("MP") != std::string::npos);

  mp.children[0] = leaf(QRule::REFL, "(1 = 1)");
  g.children = {mp};
  CHECK(check_proof(g).valid);
}

TEST_CASE("schema examples") {
  const QProof neq = prove_schema(QSchema::NEQ, {0, 1});
  CHECK(neq.conclusion == F("~(0 = 1)"));
  CHECK(check_proof(neq).valid);

  const QProof le = prove_schema(QSchema::LE, {2, 5});
  CHECK(le.conclusion == F("((1 + 1) <= ((((1 + 1) + 1) + 1) + 1))"));
  CHECK(check_proof(le).valid);
  // the Q8 witness is 3
  bool witness = false;
  std::function<void(const QProof&)> walk = [&](const QProof& p) {
    if (p.rule == QRule::EXINTRO && p.term && *p.term == numeral(3)) witness = true;
    for (const auto& c : p.children) walk(c);
  };
  walk(le);
  CHECK(witness);

  const QProof disj = prove_schema(QSchema::LE_DISJ, {2});
  CHECK(disj.conclusion ==
        F("(A v0)(((v0 <= (1 + 1)) -> (((v0 = 0) | (v0 = 1)) | (v0 = (1 + 1)))) & "
          "((((v0 = 0) | (v0 = 1)) | (v0 = (1 + 1))) -> (v0 <= (1 + 1))))"));
  CHECK(check_proof(disj).valid);

  CHECK(schema_formula(QSchema::LE_MONO, {1, 2}) == F("(A v0)(((1 + 1) <= v0) -> (1 <= v0))"));
  CHECK(schema_formula(QSchema::DICHOTOMY, {1}) == F("(A v0)((v0 <= 1) | (1 <= v0))"));
  CHECK(schema_formula(QSchema::NOT_LT_ZERO, {}) == F("(A v0)~((v0 <= 0) & ~(v0 = 0))"));
  CHECK(schema_formula(QSchema::TRICHOT_LT, {0}) ==
        F("(A v0)((((v0 <= 0) & ~(v0 = 0)) | (v0 = 0)) | ((0 <= v0) & ~(0 = v0)))"));
  CHECK(schema_formula(QSchema::LT_SUCC_DISJ, {1}) ==
        F("(A v0)((((v0 <= (1 + 1)) & ~(v0 = (1 + 1))) -> ((v0 = 0) | (v0 = 1))) & "
          "(((v0 = 0) | (v0 = 1)) -> ((v0 <= (1 + 1)) & ~(v0 = (1 + 1)))))"));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(prove_schema(QSchema::NEQ, {3, 3}), Error);
  CHECK_THROWS_AS(prove_schema(QSchema::LE, {5, 2}), Error);
  CHECK_THROWS_AS(prove_schema(QSchema::LE_MONO, {5, 2}), Error);
  CHECK_THROWS_AS(prove_schema(QSchema::DICHOTOMY, {}), Error);
  CHECK_THROWS_AS(prove_schema(QSchema::NOT_LT_ZERO, {1}), Error);
  CHECK_THROWS_AS(parse_qschema("LT"), Error);
  CHECK(parse_qschema("LE_DISJ") == QSchema::LE_DISJ);
}

TEST_CASE("every schema instance with parameters up to 10 checks and is true") {
  std::size_t count = 0;
  for (const auto& [s, ps] : grid(10)) {
    CAPTURE(to_string(s));
    CAPTURE(ps.size() ? ps[0] : 0);
    const QProof p = prove_schema(s, ps);
    const auto r = check_proof(p);
    CHECK_MESSAGE(r.valid, r.reason);
    CHECK(p.conclusion == schema_formula(s, ps));
    CHECK(free_vars(p.conclusion).empty());
    CHECK(eval_truncated(p.conclusion, {}, 40));
    ++count;
  }
  CHECK(count == 110 + 66 + 66 + 11 + 11 + 11 + 1 + 11);
}

TEST_CASE("root truth against a direct reading") {
  // y ranges over 0..30; the meaning of each schema written out by hand
  for (std::uint64_t n = 0; n <= 10; ++n)
    for (std::uint64_t y = 0; y <= 30; ++y) {
      const Valuation rho{{0, nat(y)}};
      CHECK(eval_delta0(schema_formula(QSchema::DICHOTOMY, {n}).body(), rho) == (y <= n || n <= y));
      CHECK(eval_delta0(schema_formula(QSchema::LE_DISJ, {n}).body(), rho));
      CHECK(eval_delta0(schema_formula(QSchema::LT_SUCC_DISJ, {n}).body(), rho));
      CHECK(eval_delta0(schema_formula(QSchema::TRICHOT_LT, {n}).body(), rho));
    }
}

TEST_CASE("serialization round trip") {
  for (const auto& [s, ps] : grid(4)) {
    const QProof p = prove_schema(s, ps);
    const std::string text = serialize(p);
    CHECK(serialize(deserialize(text)) == text);
    const Natural k = proof_code(p);
    CHECK(serialize(proof_decode(k)) == text);
    // k + 1 changes the closing parenthesis
    CHECK_THROWS_AS(proof_decode(k + 1), Error);
  }
  CHECK(serialize(leaf(QRule::REFL, "(0 = 0)")) == "(REFL {(0 = 0)})");
  CHECK_THROWS_AS(deserialize("(REFL {(0 = 0)}"), Error);
  CHECK_THROWS_AS(deserialize("(NOPE {(0 = 0)})"), Error);
  CHECK_THROWS_AS(deserialize("(REFL {(0 = 0)}) x"), Error);
  CHECK_THROWS_AS(proof_decode(0), Error);
}

TEST_CASE("single-node mutants are rejected") {
  std::size_t total = 0;
  for (const auto& [s, ps] : std::vector<std::pair<QSchema, std::vector<std::uint64_t>>>{
           {QSchema::NEQ, {0, 1}}, {QSchema::LE, {2, 5}}, {QSchema::NOT_LT_ZERO, {}}}) {
    const QProof p = prove_schema(s, ps);
    REQUIRE(check_proof(p).valid);
    for (const auto& m : mutants(p)) {
      CHECK_FALSE(check_proof(m).valid);
      ++total;
    }
  }
  CHECK(total >= 20);
}

TEST_CASE("q oracle") {
  const TheoryOracle q = q_oracle();
  const Formula neq01 = F("~(0 = 1)");
  const Natural k = proof_code(prove_schema(QSchema::NEQ, {0, 1}));
  CHECK(q.proof_check(k, neq01));
  CHECK_FALSE(q.proof_check(k + 1, neq01));
  CHECK_FALSE(q.proof_check(k, F("~(1 = 0)")));
  CHECK_FALSE(q.proof_check(12345, neq01));
  CHECK(q.enumerator(k) == std::optional<Formula>(neq01));
  CHECK_FALSE(q.enumerator(k + 1).has_value());
  CHECK(q.find_proof(neq01) == std::optional<Natural>(k));
  CHECK_FALSE(q.find_proof(F("(0 = 1)")).has_value());
  CHECK_FALSE(q.decides);
  CHECK(q.conditions == "abcde");
  CHECK(provable(q, neq01, 10) == Verdict3::True);
  CHECK(provable(q, F("(0 = 1)"), 10) == Verdict3::Unknown);
  CHECK(unprovable(q, F("(0 = 1)"), 10) == Verdict3::Unknown);

  auto rec = recognize_schema(schema_formula(QSchema::LE_MONO, {3, 7}));
  REQUIRE(rec);
  CHECK(rec->first == QSchema::LE_MONO);
  CHECK(rec->second == std::vector<std::uint64_t>{3, 7});
  CHECK_FALSE(recognize_schema(F("(A v1)((v1 <= 1) | (1 <= v1))")));
}

TEST_CASE("q oracle conditions on the grid") {
  const TheoryOracle q = q_oracle();
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    for (std::uint64_t m = 0; m <= 10; ++m) {
      // (a)
      if (n != m) CHECK(provable(q, schema_formula(QSchema::NEQ, {n, m}), 0) == Verdict3::True);
      if (n <= m) CHECK(provable(q, schema_formula(QSchema::LE, {n, m}), 0) == Verdict3::True);
    }
    // (b), (c)
    CHECK(provable(q, schema_formula(QSchema::DICHOTOMY, {n}), 0) == Verdict3::True);
    const Formula c = schema_formula(QSchema::LE_DISJ, {n});
    CHECK(provable(q, c, 0) == Verdict3::True);
    // (d): the code of the known proof is accepted
    const Natural k = proof_code(prove_schema(QSchema::LE_DISJ, {n}));
    CHECK(q.proof_check(k, c));
    // (e): codes of other proofs are not proofs of c
    const Natural other = proof_code(prove_schema(QSchema::DICHOTOMY, {n}));
    CHECK_FALSE(q.proof_check(other, c));
    CHECK_FALSE(q.proof_check(k - 1, c));
  }
}

TEST_CASE("make_oracle q") {
  const TheoryOracle q = make_oracle("q");
  CHECK(q.kind == "q_kernel");
}
