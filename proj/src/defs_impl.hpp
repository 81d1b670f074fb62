#pragma once

#include "arith/syntax_defs.hpp"

namespace arith::detail {

/// Parts of the code `code` under symbol op (`fixed` pins other parts).
ir::Provider parts_of(Scheme sc, Sym op, ir::Expr code, std::size_t part,
                      std::vector<std::pair<std::size_t, ir::Expr>> fixed = {});
/// The greedy building sequence of `code`, when there is one.
ir::Provider buildseq_of(Scheme sc, SynPred kind, ir::Expr code);
/// Lenient value of the term `code` under the valuation `y`.
ir::Provider value_of(Scheme sc, ir::Expr code, ir::Expr y);

void add_unique(std::vector<Natural>& v, const Natural& x);

}  // namespace arith::detail
