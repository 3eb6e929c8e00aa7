#pragma once

#include "sondow/factorization.hpp"

namespace sondow {

/// Product of the distinct primes dividing n; radical(1) = 1.
BigInt radical(const Factorization& f);

bool is_squarefree(const Factorization& f) noexcept;

BigInt euler_phi(const Factorization& f);

/// Carmichael's λ: the exponent of the unit group mod n.
BigInt carmichael_lambda(const Factorization& f);

/// n' = n · Σ e_i / p_i, evaluated term by term in integers. 1' = 0, p' = 1.
BigInt arithmetic_derivative(const Factorization& f);

/// Σ_{p | n} n / p over distinct primes (the radical-sum that every Sondow
/// characterization reduces to).
BigInt prime_quotient_sum(const Factorization& f);

}  // namespace sondow
