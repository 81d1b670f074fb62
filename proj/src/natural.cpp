#include "arith/natural.hpp"

#include <mutex>

namespace arith {

Natural checked_pow(const Natural& base, const Natural& exp) {
  if (base == 0) return exp == 0 ? Natural(1) : Natural(0);
  if (base == 1 || exp == 0) return Natural(1);
  if (!fits_u64(exp)) throw FeasibilityError("power exponent too large to materialize");
  const std::uint64_t e = to_u64(exp);
  const std::uint64_t bits = bit_length(base);
  if (e > kMaxMaterializedBits || (bits - 1) * e > kMaxMaterializedBits)
    throw FeasibilityError("power result exceeds materialization guard");
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

std::uint64_t remove_factor(const Natural& n, const Natural& p, Natural* rest) {
  Natural tmp;
  const auto k = mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  if (rest) *rest = tmp;
  return k;
}

namespace {

std::mutex g_prime_mutex;
std::vector<std::uint64_t> g_primes{2, 3, 5, 7, 11, 13};

}  // namespace

Natural nth_prime(std::uint64_t i) {
  std::lock_guard lock(g_prime_mutex);
  if (i > 50'000'000) throw FeasibilityError("prime index too large");
  while (g_primes.size() <= i) {
    std::uint64_t c = g_primes.back() + 2;
    for (;; c += 2) {
      bool prime = true;
      for (std::uint64_t p : g_primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) break;
    }
    g_primes.push_back(c);
  }
  return nat(g_primes[i]);
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace arith
