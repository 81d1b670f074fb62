#include "arith/boxcheck.hpp"

#include <limits>

#include <omp.h>

namespace arith {

namespace {

std::uint64_t box_size(unsigned arity, std::uint64_t max) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / (max + 1)) throw FeasibilityError("box too large");
    n *= max + 1;
  }
  return n;
}

// Point number k, first coordinate most significant.
std::vector<Natural> point(std::uint64_t k, unsigned arity, std::uint64_t max) {
  std::vector<Natural> p(arity);
  for (unsigned i = arity; i-- > 0;) {
    p[i] = nat(k % (max + 1));
    k /= max + 1;
  }
  return p;
}

bool safe(const BoxPredicate& agree, const std::vector<Natural>& p) {
  try {
    return agree(p);
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::uint64_t> to_u64s(const std::vector<Natural>& p) {
  std::vector<std::uint64_t> out;
  for (const auto& x : p) out.push_back(to_u64(x));
  return out;
}

template <class PointFn>
BoxResult run_serial(std::uint64_t n, PointFn&& at, const BoxPredicate& agree) {
  BoxResult r;
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto p = at(k);
    ++r.checked;
    if (!safe(agree, p)) {
      if (r.mismatches++ == 0) r.first_failure = to_u64s(p);
    }
  }
  return r;
}

template <class PointFn>
BoxResult run_parallel(std::uint64_t n, PointFn&& at, const BoxPredicate& agree) {
  std::uint64_t bad = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : bad) reduction(min : first)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::uint64_t>(k);
    if (!safe(agree, at(idx))) {
      ++bad;
      if (idx < first) first = idx;
    }
  }
  BoxResult r;
  r.checked = n;
  r.mismatches = bad;
  if (bad) r.first_failure = to_u64s(at(first));
  return r;
}

}  // namespace

BoxResult box_check_serial(unsigned arity, std::uint64_t max, const BoxPredicate& agree) {
  return run_serial(box_size(arity, max), [&](std::uint64_t k) { return point(k, arity, max); }, agree);
}

BoxResult box_check_parallel(unsigned arity, std::uint64_t max, const BoxPredicate& agree) {
  return run_parallel(box_size(arity, max), [&](std::uint64_t k) { return point(k, arity, max); }, agree);
}

BoxResult range_check_serial(std::uint64_t lo, std::uint64_t hi, const BoxPredicate& agree) {
  if (hi < lo) return {};
  return run_serial(hi - lo + 1, [&](std::uint64_t k) { return std::vector<Natural>{nat(lo + k)}; }, agree);
}

BoxResult range_check_parallel(std::uint64_t lo, std::uint64_t hi, const BoxPredicate& agree) {
  if (hi < lo) return {};
  return run_parallel(hi - lo + 1, [&](std::uint64_t k) { return std::vector<Natural>{nat(lo + k)}; }, agree);
}

}  // namespace arith
