#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arith/ast.hpp"

namespace arith {

/// Robinson's Q with successor written x + 1.
///   Q1 (A v0)~((v0 + 1) = 0)
///   Q2 (A v0)(A v1)(((v0 + 1) = (v1 + 1)) -> (v0 = v1))
///   Q3 (A v0)(~(v0 = 0) -> (E v1)(v0 = (v1 + 1)))
///   Q4 (A v0)((v0 + 0) = v0)
///   Q5 (A v0)(A v1)((v0 + (v1 + 1)) = ((v0 + v1) + 1))
///   Q6 (A v0)((v0 * 0) = 0)
///   Q7 (A v0)(A v1)((v0 * (v1 + 1)) = ((v0 * v1) + v0))
///   Q8 (A v0)(A v1)((v0 <= v1) <-> (E v2)((v2 + v0) = v1))
///   Q9 (1 = (0 + 1))
/// <-> is the conjunction of both implications.
Formula q_axiom(int i);
inline constexpr int kQAxioms = 9;

/// Axioms and schemas are leaves; MP, GEN and EXELIM take children.
///   AX       Qi
///   TAUT     propositional tautology over atoms and quantified subformulas
///   INST     (A x)p -> p[t/x]                      param t
///   EXINTRO  p[t/x] -> (E x)p                      param t
///   DIST     (A x)(p -> q) -> ((A x)p -> (A x)q)
///   VACUOUS  p -> (A x)p,  x not free in p
///   BDEF     (A x <= t)p <-> (A x)((x <= t) -> p),  (E x <= t)p <-> (E x)((x <= t) & p)
///   REFL     t = t
///   EQSUBST  s = t -> (p[s/x] -> p[t/x])            params x, p
///   MP       a, (a -> b)  |-  b
///   GEN      p  |-  (A x)p
///   EXELIM   (A x)(p -> q)  |-  (E x)p -> q,  x not free in q
enum class QRule { AX, TAUT, INST, EXINTRO, DIST, VACUOUS, BDEF, REFL, EQSUBST, MP, GEN, EXELIM };
std::string to_string(QRule r);
QRule parse_qrule(std::string_view s);

struct QProof {
  QRule rule;
  Formula conclusion;
  int axiom = 0;                 // AX
  std::optional<Term> term;      // INST, EXINTRO
  VarIndex var = 0;              // EQSUBST
  std::optional<Formula> shape;  // EQSUBST
  std::vector<QProof> children;
};

struct QCheck {
  bool valid = true;
  std::vector<std::size_t> path;  // child indices from the root to the first bad node
  std::string reason;
};
QCheck check_proof(const QProof& p);
std::size_t proof_size(const QProof& p);

/// `(RULE {conclusion} [param]* child*)`; params are a term for INST and
/// EXINTRO, `[Qi]` for AX, `[vK] [shape]` for EQSUBST.
std::string serialize(const QProof& p);
QProof deserialize(const std::string& text);
/// Base-256 packing of the serialization.
Natural proof_code(const QProof& p);
QProof proof_decode(const Natural& k);

enum class QSchema { NEQ, LE, LE_MONO, DICHOTOMY, LE_DISJ, TRICHOT_LT, NOT_LT_ZERO, LT_SUCC_DISJ };
std::string to_string(QSchema s);
QSchema parse_qschema(std::string_view s);
std::size_t schema_arity(QSchema s);
/// The instance proved by prove_schema, with y = v0.
Formula schema_formula(QSchema s, const std::vector<std::uint64_t>& params);
QProof prove_schema(QSchema s, const std::vector<std::uint64_t>& params);
/// A schema and parameters whose instance is exactly f.
std::optional<std::pair<QSchema, std::vector<std::uint64_t>>> recognize_schema(const Formula& f);

/// n when t is exactly numeral(n).
std::optional<std::uint64_t> numeral_of(const Term& t);

}  // namespace arith
