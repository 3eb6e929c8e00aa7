#include "sondow/arith.hpp"

#include "sondow/primality.hpp"

namespace sondow {

namespace {

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace

BigInt radical(const Factorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f.factors()) r *= p;
  return r;
}

bool is_squarefree(const Factorization& f) noexcept {
  for (const auto& pe : f.factors()) {
    if (pe.exponent != 1) return false;
  }
  return true;
}

BigInt euler_phi(const Factorization& f) {
  BigInt phi = 1;
  for (const auto& [p, e] : f.factors()) phi *= pow(p, e - 1) * (p - 1);
  return phi;
}

BigInt carmichael_lambda(const Factorization& f) {
  BigInt lambda = 1;
  for (const auto& [p, e] : f.factors()) {
    BigInt term;
    if (p == 2) {
      term = e <= 2 ? BigInt(e) : pow(BigInt(2), e - 2);  // λ(2)=1, λ(4)=2
    } else {
      term = pow(p, e - 1) * (p - 1);
    }
    lambda = lcm(lambda, term);
  }
  return lambda;
}

BigInt arithmetic_derivative(const Factorization& f) {
  BigInt d = 0;
  for (const auto& [p, e] : f.factors()) d += f.value() / p * e;
  return d;
}

BigInt prime_quotient_sum(const Factorization& f) {
  BigInt s = 0;
  for (const auto& pe : f.factors()) s += f.value() / pe.prime;
  return s;
}

}  // namespace sondow
