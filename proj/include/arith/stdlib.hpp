#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arith/pr.hpp"

namespace arith {

// ---- construction helpers ----
namespace prb {

PRTerm P(unsigned i, unsigned n);
PRTerm C(PRTerm f, std::vector<PRTerm> gs);
PRTerm R(PRTerm f, PRTerm g);
/// Unary constant function x |-> c, built by binary expansion.
PRTerm konst(const Natural& c);
/// Constant c at arity n.
PRTerm konst(const Natural& c, unsigned n);
/// Unary h with h(0) = a, h(k+1) = g(h(k), k); g has arity 2.
PRTerm rec0(const Natural& a, PRTerm g);
/// S(x, b) = sum_{k<=b} chi(x, k); chi has arity n+1, result arity n+1.
PRTerm bsum(PRTerm chi);
/// prod_{k<=b} chi(x, k).
PRTerm bprod(PRTerm chi);
/// Least k <= b with chi(x, k) != 0, or b+1 when there is none.
PRTerm bmu(PRTerm chi);

}  // namespace prb

/// Named entries. Public names are the ones listed by stdlib_names();
/// helpers used to build them are also reachable by name.
const PRTerm& stdlib(std::string_view name);
bool stdlib_has(std::string_view name);
std::vector<std::string> stdlib_names();
/// Every registered entry, public and internal, in dependency order.
std::vector<std::string> stdlib_all_names();
unsigned stdlib_arity(std::string_view name);

/// Direct (non-combinator) implementation of an entry.
Natural stdlib_direct(std::string_view name, std::span<const Natural> args);

/// Kernel table mapping every entry node to its direct implementation.
const KernelTable& stdlib_kernels();

enum class RelOp { And, Or, Not, BForall, BExists };
RelOp parse_relop(std::string_view s);

/// Characteristic-function algebra. For BForall/BExists the arguments are
/// (chi, bound) where chi has arity n+1 and bound has arity n; the result
/// has arity n and quantifies the last argument of chi over 0..bound.
PRTerm rel_combine(RelOp op, const std::vector<PRTerm>& args);

/// chi_eq(f(a), b), arity n+1.
PRTerm graph_of(const PRTerm& f);

}  // namespace arith
