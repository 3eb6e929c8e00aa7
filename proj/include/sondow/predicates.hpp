#pragma once

// Membership tests for μ-Sondow numbers: n such that p^s | (n/p + μ) for every
// prime power p^s exactly dividing n. Giuga numbers are the composite
// (-1)-Sondow numbers, weak primary pseudoperfect numbers the 1-Sondow ones.
//
// Each characterization below is computed along its own route (prime-power
// residues, a single congruence, brute-force power sums, Bernoulli numbers,
// exact Egyptian fractions, the arithmetic derivative) so they can be checked
// against each other.

#include "sondow/factorization.hpp"
#include "sondow/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sondow {

struct SondowWitness {
  BigInt prime;
  unsigned exponent = 1;
  /// (n/p + μ) mod p^s, in [0, p^s).
  BigInt residue;

  friend bool operator==(const SondowWitness&, const SondowWitness&) = default;
};

struct SondowVerdict {
  BigInt n;
  BigInt mu;
  bool member = false;
  /// One entry per prime power exactly dividing n, in prime order.
  std::vector<SondowWitness> witnesses;
};

enum class PowerSumExponent { Phi, Lambda };
enum class BernoulliMode { Congruence, ExactOracle };

struct OracleBounds {
  /// power_sum_check evaluates n - 1 modular powers; refuse above this n.
  std::uint64_t power_sum_max_n = 1'000'000;
  /// Largest Bernoulli index the exact oracle will build.
  std::uint32_t bernoulli_cap = 500;
};

/// The residue μ* in [0, n) with n ∈ S_μ ⟺ μ ≡ μ* (mod n); that is
/// (-Σ_{p|n} n/p) mod n. Returns 0 for n = 1.
BigInt canonical_mu(const Factorization& f);

/// Prime-power divisibility test with witnesses. n = 1 is a member for every μ.
SondowVerdict is_mu_sondow(const Factorization& f, const BigInt& mu);

/// Σ_{p|n} n/p + μ ≡ 0 (mod n).
bool congruence_sum_check(const Factorization& f, const BigInt& mu);

/// Brute force: Σ_{i=1}^{n-1} i^k ≡ μ (mod n) with k = φ(n) or λ(n).
/// n = 1 is the empty sum and always holds. Throws OracleBoundExceeded when
/// n > max_n.
bool power_sum_check(const Factorization& f, const BigInt& mu, PowerSumExponent exponent,
                     std::uint64_t max_n = OracleBounds{}.power_sum_max_n);

/// Closed form of Σ_{i=1}^{n-1} i^k mod n for even k:
/// (-Σ_{p|n, (p-1)|k} n/p) mod n. Needs n >= 2 (Domain) and even k
/// (InvalidExponent).
BigInt power_sum_residue(const Factorization& f, const BigInt& k);

/// n·B_{φ(n)} ≡ μ (mod n). Congruence mode goes through power_sum_residue;
/// exact-oracle mode builds B_{φ(n)} as a rational (OutOfRange above cap).
/// For n ≤ 2, where φ(n) = 1 is odd, both modes use B_1 = -1/2 directly.
bool bernoulli_check(const Factorization& f, const BigInt& mu, BernoulliMode mode,
                     std::uint32_t cap = OracleBounds{}.bernoulli_cap);

/// μ/n + Σ_{p|n} 1/p, exactly.
ExactRational egyptian_sum(const Factorization& f, const BigInt& mu);
/// egyptian_sum is an integer. For μ = 1 and n >= 2 the sum is positive, so
/// "integer" and "natural number" coincide.
bool egyptian_check(const Factorization& f, const BigInt& mu);

/// n' = a·n - μ for some integer a >= 1. Only defined for μ = ±1
/// (Unsupported otherwise). Primes fail for μ = -1 since p' = 1 forces a = 0.
bool derivative_check(const Factorization& f, const BigInt& mu);

/// Composite and (-1)-Sondow.
bool is_giuga(const Factorization& f);
/// 1-Sondow (1 included).
bool is_weak_ppp(const Factorization& f);
/// Σ_{p|n} 1/p + 1/n = 1 exactly. Throws Domain for n = 1.
bool is_primary_ppp(const Factorization& f);

struct CharacterizationFlags {
  bool divisibility = false;
  bool congruence_sum = false;
  bool egyptian = false;
  bool bernoulli_congruence = false;
  /// Absent when the oracle's bound was exceeded; absent is never "false".
  std::optional<bool> power_sum;
  std::optional<bool> power_sum_lambda;
  std::optional<bool> bernoulli;
  /// Only for μ = 1, or μ = -1 on composite n (the derivative form of the
  /// Giuga condition is stated for composites only).
  std::optional<bool> derivative;

  /// True when every present flag has the same value.
  bool consistent() const noexcept;
  /// The common value; meaningful only when consistent().
  bool verdict() const noexcept { return divisibility; }

  friend bool operator==(const CharacterizationFlags&, const CharacterizationFlags&) = default;
};

/// Evaluates every characterization whose preconditions and bounds hold.
CharacterizationFlags classify(const Factorization& f, const BigInt& mu,
                               const OracleBounds& bounds = {});

}  // namespace sondow
