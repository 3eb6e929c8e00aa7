#pragma once

// Maps that build new Sondow numbers from known ones. Every output is
// re-verified with is_mu_sondow before it is returned; a failed re-check is a
// library defect and surfaces as std::logic_error.

#include "sondow/factorization.hpp"

namespace sondow {

/// n(n+1) for a weak primary pseudoperfect n with n + 1 prime.
/// PreconditionFailed if n is not weak PPP, NotApplicable if n + 1 is not prime.
Factorization extend_by_successor(const Factorization& f);

struct LiftResult {
  BigInt input_n;
  BigInt input_mu;
  BigInt output_n;
  BigInt output_mu;
  Factorization output_factorization;
  bool verified = false;
};

/// |μ|·n ∈ S_μ from n ∈ S_sgn(μ) with Rad(|μ|) | n, for |μ| > 1.
/// Errors: Domain (|μ| <= 1), RadicalConditionFailed, MembershipFailed.
LiftResult lift(const Factorization& f, const BigInt& mu, const FactorBudget& budget = {});

struct LiftDecomposition {
  BigInt n;
  Factorization n_factorization;
  bool radical_divides = false;
  bool base_member = false;
};

/// Splits value = |μ|·n and reports the two conditions that together are
/// equivalent to value ∈ S_μ. NotAMultiple when |μ| does not divide value.
LiftDecomposition lift_converse_check(const Factorization& value, const BigInt& mu,
                                      const FactorBudget& budget = {});

struct GcdReduction {
  BigInt delta;
  Factorization reduced;
  BigInt reduced_mu;
};

/// δ = gcd(n, μ); returns n/δ (square-free) and μ/δ, with n/δ ∈ S_{μ/δ}.
/// NotASondowNumber when n ∉ S_μ or μ = 0.
GcdReduction reduce_by_gcd(const Factorization& f, const BigInt& mu);

}  // namespace sondow
