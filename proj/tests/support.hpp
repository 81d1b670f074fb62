#pragma once

// Helpers shared by the unit tests and the acceptance runner. Everything
// here is computed independently of the library code under test.

#include <vector>

#include "arith/boxcheck.hpp"
#include "arith/stdlib.hpp"

namespace arith::test {

inline Natural seq_code(const std::vector<unsigned>& xs) {
  // prod p_i^(x_i + 1), with primes found by trial division
  Natural acc = 1;
  unsigned p = 1;
  for (unsigned x : xs) {
    do {
      ++p;
      bool prime = p >= 2;
      for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (prime) break;
    } while (true);
    Natural f;
    mpz_ui_pow_ui(f.get_mpz_t(), p, x + 1);
    acc *= f;
  }
  return acc;
}

/// Literal evaluation of the entry's own definition (every other entry runs
/// on its kernel) against the direct implementation, over {0..max}^arity.
inline BoxResult entry_check(const std::string& name, std::uint64_t max, bool parallel = false) {
  const PRTerm& t = stdlib(name);
  const unsigned n = stdlib_arity(name);
  EvalOptions o{.kernels = &stdlib_kernels(), .disabled_kernels = {name}};
  BoxPredicate agree = [&](const std::vector<Natural>& args) {
    return eval_pr(t, args, o) == stdlib_direct(name, args);
  };
  return parallel ? box_check_parallel(n, max, agree) : box_check_serial(n, max, agree);
}

inline std::uint64_t entry_mismatches(const std::string& name, std::uint64_t max) {
  return entry_check(name, max).mismatches;
}

}  // namespace arith::test
