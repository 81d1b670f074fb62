#pragma once

#include <functional>
#include <vector>

#include "arith/natural.hpp"

namespace arith {

/// Exhaustive agreement check over the box {0..max}^arity.
struct BoxResult {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  /// Lexicographically first failing point, if any.
  std::vector<std::uint64_t> first_failure;
};

using BoxPredicate = std::function<bool(const std::vector<Natural>&)>;

BoxResult box_check_serial(unsigned arity, std::uint64_t max, const BoxPredicate& agree);
/// OpenMP version; same result as the serial one.
BoxResult box_check_parallel(unsigned arity, std::uint64_t max, const BoxPredicate& agree);

/// Agreement over the range lo..hi inclusive, one point at a time.
BoxResult range_check_serial(std::uint64_t lo, std::uint64_t hi, const BoxPredicate& agree);
BoxResult range_check_parallel(std::uint64_t lo, std::uint64_t hi, const BoxPredicate& agree);

}  // namespace arith
