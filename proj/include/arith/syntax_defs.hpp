#pragma once

#include "arith/coding.hpp"
#include "arith/compiler.hpp"
#include "arith/eval.hpp"

namespace arith {

/// Combinator vocabulary of a coding scheme.
struct Vocab {
  ir::Fn seq, len, idx, last, replace, triple, var, var_index;
  // code constructors
  ir::Fn add, mul, eq, le, neg, imp, all;
  Natural zero, one;
};
const Vocab& vocab(Scheme s);

/// Bound expressions.
ir::Expr buildseq_bound(const ir::Expr& x);                      // p_x^((x+1)^2)
ir::Expr termval_bound(const ir::Expr& u, const ir::Expr& z);    // p_u^(z^u + 1)
ir::Expr valseq_bound(const ir::Expr& x, const ir::Expr& y);     // p_x^(x (p_x^(y^x+1) + 1))

/// The building-sequence relations, compiled literally. The outer
/// existential searches (over s, t, u, v) carry structural candidate hooks.
struct SyntaxDefs {
  ir::Fn trmseq;   // (x)
  ir::Fn trm;      // (x)
  ir::Fn atm;      // (x)
  ir::Fn fml_seq;  // (x)
  ir::Fn fml;      // (x)
  ir::Fn valseq;   // (y, s, t)
  ir::Fn val;      // (x, y, z)
};
const SyntaxDefs& syntax_defs(Scheme s);

enum class SeqPred { TrmSeq, Trm, Atm, FmlSeq, Fml, ValSeq, Val };
SeqPred parse_seqpred(std::string_view s);
std::string to_string(SeqPred p);
unsigned arity(SeqPred p);

/// Evaluate a definition with at most `budget` evaluation steps; Unknown when
/// the budget runs out or a value cannot be materialized.
Verdict3 seqdef(Scheme s, SeqPred p, std::span<const Natural> args, std::uint64_t budget);

/// Variable v_i reads [y]_i, and 0 past the end of y.
Valuation valuation_of(Scheme s, const Natural& y);
/// Value of the term coded by t under y; throws when t is not a term or y
/// is not a sequence covering the variables of t.
Natural val_native(Scheme s, const Natural& t, const Natural& y);
/// Values of the elements of the term building sequence s under y (lenient
/// reading, as the literal definitions do).
std::vector<Natural> value_elements(Scheme s, const Natural& seq, const Natural& y);

}  // namespace arith
