#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arith/ast.hpp"
#include "arith/lazy.hpp"

namespace arith {

/// Paper: variables 2i+2, fixed odd symbol codes, sequences as prime powers,
/// composite expressions 2<op, parts...> + 1.
/// Compact: prefix byte strings read big-endian; sequences are a marker byte
/// followed by length-prefixed elements.
enum class Scheme { Paper, Compact };

Scheme parse_scheme(std::string_view s);
std::string to_string(Scheme s);

class DecodeError : public Error {
public:
  DecodeError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// ---- sequences ----
Natural seq_encode(Scheme s, const std::vector<Natural>& xs);
std::optional<std::vector<Natural>> seq_decode(Scheme s, const Natural& c);
bool seq_test(Scheme s, const Natural& c);
/// Throw Error on a non-sequence code or an index out of range.
std::size_t seq_len(Scheme s, const Natural& c);
Natural seq_idx(Scheme s, const Natural& c, std::size_t i);
Natural seq_last(Scheme s, const Natural& c);
/// z with its k-th element replaced by r (z unchanged when k >= len).
Natural seq_replace(Scheme s, const Natural& z, const Natural& r, std::size_t k);

/// <i, z, w>: 2^i 3^z 5^w under Paper, a three-element sequence under Compact.
Natural triple(Scheme s, const Natural& i, const Natural& z, const Natural& w);
std::optional<std::array<Natural, 3>> untriple(Scheme s, const Natural& c);

// ---- syntax ----
enum class Sym { Zero, One, Var, Add, Mul, Eq, Le, Not, Imp, All };

/// Fixed symbol code (Paper: odd table; Compact: byte value).
unsigned symbol_code(Scheme s, Sym sym);
Natural var_code(Scheme s, VarIndex i);
std::optional<VarIndex> var_of(Scheme s, const Natural& c);

/// Codes the {~, ->, (A v <= t)} core; other connectives are desugared first.
Natural encode(Scheme s, const Term& t);
Natural encode(Scheme s, const Formula& f);
Natural encode(Scheme s, const Syntax& x);
Syntax decode(Scheme s, const Natural& c);
Term decode_term(Scheme s, const Natural& c);
Formula decode_formula(Scheme s, const Natural& c);

/// One-level structure of a composite code: the symbol and its parts
/// (for All: variable code, bound code, body code).
struct Split {
  Sym op;
  std::vector<Natural> parts;
};
/// Under Paper the split is unique. Under Compact every way of cutting the
/// byte string after the symbol is returned (parts need not be well formed).
std::vector<Split> splits(Scheme s, const Natural& c);
/// Build a composite code from its parts.
Natural compose(Scheme s, Sym op, const std::vector<Natural>& parts);

enum class SynPred { Var, Trm, Atm, Fml };
SynPred parse_synpred(std::string_view s);
std::string to_string(SynPred p);

/// Structural oracle: is c a code of the given syntactic class?
bool syn(Scheme s, SynPred p, const Natural& c);

/// Distinct subexpression codes in post order (subterms of a term; the
/// subformulas of a formula, terms excluded). Its code is the canonical
/// building sequence.
std::vector<Natural> canonical_elements(Scheme s, const Syntax& x);
Natural canonical_buildseq(Scheme s, const Syntax& x);

/// Structural enumeration of building sequences for c: candidate elements
/// are the sub-codes of c (Compact: byte substrings; Paper: nested parts),
/// taken in increasing order and kept when the term (or formula) clause is
/// met by the elements already kept. Empty when c is not reached.
std::vector<Natural> greedy_elements(Scheme s, SynPred kind, const Natural& c);

enum class BoundKind { BuildSeq, TermVal };
BoundKind parse_boundkind(std::string_view s);
/// BuildSeq: p_x^((x+1)^2). TermVal: p_u^(z^u + 1).
Lazy paper_bound(BoundKind k, const Natural& x, const Natural& z = 0);

}  // namespace arith
