#pragma once

#include "sondow/bigint.hpp"
#include "sondow/errors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sondow {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition of a positive integer: primes strictly
// increasing, exponents >= 1, product equal to value(). The empty list is the
// factorization of 1.
class Factorization {
 public:
  Factorization() = default;

  /// Trusted constructor for factor lists produced by this library. Sorts and
  /// merges repeated primes; does not run primality tests.
  static Factorization from_primes(std::vector<PrimePower> factors);

  /// Validating constructor for externally supplied factor lists. Every prime
  /// must pass is_prime and the product must equal claimed_value, otherwise
  /// throws Error(InvalidHint).
  static Factorization from_claimed(const BigInt& claimed_value, std::vector<PrimePower> factors);

  const BigInt& value() const noexcept { return value_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  bool is_prime() const noexcept { return factors_.size() == 1 && factors_[0].exponent == 1; }
  /// n > 1 and not prime.
  bool is_composite() const noexcept { return !is_one() && !is_prime(); }

  /// "2^3 * 3 * 5", or "1".
  std::string to_string() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.value_ == b.value_ && a.factors_ == b.factors_;
  }

 private:
  BigInt value_{1};
  std::vector<PrimePower> factors_;
};

Factorization multiply(const Factorization& a, const Factorization& b);

/// a / b where b | a. Throws Error(NotAMultiple) otherwise.
Factorization divide_exact(const Factorization& a, const Factorization& b);

struct FactorBudget {
  /// Trial division runs over primes up to this bound.
  std::uint64_t trial_limit = 1'000'000;
  /// Total Pollard-Brent iterations spent on one call before giving up.
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
};

// Thrown when factorize runs out of budget. Carries what was found so far and
// the unfactored cofactor (composite, every prime factor above trial_limit).
class FactorizationIncomplete : public Error {
 public:
  FactorizationIncomplete(std::vector<PrimePower> found, BigInt cofactor);

  std::span<const PrimePower> found() const noexcept { return found_; }
  const BigInt& cofactor() const noexcept { return cofactor_; }

 private:
  std::vector<PrimePower> found_;
  BigInt cofactor_;
};

/// Complete factorization by trial division, then Pollard-Brent rho on what
/// remains. n must be >= 1.
Factorization factorize(const BigInt& n, const FactorBudget& budget = {});
Factorization factorize(std::uint64_t n, const FactorBudget& budget = {});

/// Largest trial-division bound honoured; FactorBudget::trial_limit is
/// clamped to it.
inline constexpr std::uint32_t kTrialTableLimit = std::uint32_t{1} << 21;

/// Ascending primes p <= limit (limit clamped to kTrialTableLimit). The table
/// is built once and shared.
std::span<const std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace sondow
