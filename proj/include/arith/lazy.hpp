#pragma once

#include <memory>
#include <optional>
#include <string>

#include "arith/natural.hpp"

namespace arith {

/// A natural number kept as an expression over +, *, ^ and the prime
/// enumeration, so that astronomically large bounds can be compared exactly
/// against materialized codes without being computed.
class Lazy {
public:
  enum class Kind { Const, Add, Mul, Pow, Prime };

  static Lazy constant(Natural v);
  static Lazy add(Lazy a, Lazy b);
  static Lazy mul(Lazy a, Lazy b);
  static Lazy pow(Lazy a, Lazy b);
  /// p_a, the a-th prime (p_0 = 2).
  static Lazy prime(Lazy a);

  Kind kind() const { return node_->kind; }

  /// Exact value; throws FeasibilityError when it cannot be materialized.
  Natural value() const;
  /// A lower bound on the value and whether it is exact. Values above
  /// 2^cap_bits collapse to the inexact bound 2^cap_bits.
  struct Estimate {
    Natural lo;
    bool exact;
  };
  Estimate estimate(std::uint64_t cap_bits = kDefaultCap) const;
  /// c <= value, decided exactly when possible.
  std::optional<bool> bounds(const Natural& c) const;

  /// Decimal when small, otherwise the symbolic form.
  std::string str() const;

  static constexpr std::uint64_t kDefaultCap = 1u << 22;
  /// Largest prime index computed exactly during estimation.
  static constexpr std::uint64_t kExactPrimeIndex = 200'000;

private:
  struct Node {
    Kind kind;
    Natural v;
    std::shared_ptr<const Node> a, b;
  };
  explicit Lazy(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::string symbolic() const;
  std::shared_ptr<const Node> node_;
};

}  // namespace arith
