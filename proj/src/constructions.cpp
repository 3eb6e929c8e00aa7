#include "sondow/constructions.hpp"

#include "sondow/arith.hpp"
#include "sondow/predicates.hpp"
#include "sondow/primality.hpp"

#include <stdexcept>

namespace sondow {

namespace {

void require_member(const Factorization& f, const BigInt& mu, const char* what) {
  if (!is_mu_sondow(f, mu).member) {
    throw std::logic_error(std::string(what) + ": output " + to_decimal(f.value()) +
                           " failed re-verification for mu = " + to_decimal(mu));
  }
}

int sign(const BigInt& v) { return sgn(v) < 0 ? -1 : 1; }

}  // namespace

Factorization extend_by_successor(const Factorization& f) {
  if (!is_weak_ppp(f)) {
    throw Error(ErrorKind::PreconditionFailed,
                to_decimal(f.value()) + " is not weak primary pseudoperfect");
  }
  BigInt next = f.value() + 1;
  if (!is_prime(next)) {
    throw Error(ErrorKind::NotApplicable, to_decimal(next) + " is not prime");
  }
  Factorization out = multiply(f, Factorization::from_primes({{next, 1}}));
  require_member(out, 1, "extend_by_successor");
  return out;
}

LiftResult lift(const Factorization& f, const BigInt& mu, const FactorBudget& budget) {
  const BigInt magnitude = abs(mu);
  if (magnitude <= 1) throw Error(ErrorKind::Domain, "lift needs |mu| > 1");
  const Factorization mu_factors = factorize(magnitude, budget);
  if (!mpz_divisible_p(f.value().get_mpz_t(), radical(mu_factors).get_mpz_t())) {
    throw Error(ErrorKind::RadicalConditionFailed,
                "Rad(" + to_decimal(magnitude) + ") does not divide " + to_decimal(f.value()));
  }
  if (!is_mu_sondow(f, sign(mu)).member) {
    throw Error(ErrorKind::MembershipFailed, to_decimal(f.value()) + " is not " +
                                                 std::to_string(sign(mu)) + "-Sondow");
  }
  LiftResult out;
  out.input_n = f.value();
  out.input_mu = mu;
  out.output_factorization = multiply(mu_factors, f);
  out.output_n = out.output_factorization.value();
  out.output_mu = mu;
  require_member(out.output_factorization, mu, "lift");
  out.verified = true;
  return out;
}

LiftDecomposition lift_converse_check(const Factorization& value, const BigInt& mu,
                                      const FactorBudget& budget) {
  const BigInt magnitude = abs(mu);
  if (magnitude <= 1) throw Error(ErrorKind::Domain, "lift_converse_check needs |mu| > 1");
  if (!mpz_divisible_p(value.value().get_mpz_t(), magnitude.get_mpz_t())) {
    throw Error(ErrorKind::NotAMultiple,
                to_decimal(magnitude) + " does not divide " + to_decimal(value.value()));
  }
  const Factorization mu_factors = factorize(magnitude, budget);
  LiftDecomposition out;
  out.n_factorization = divide_exact(value, mu_factors);
  out.n = out.n_factorization.value();
  out.radical_divides =
      mpz_divisible_p(out.n.get_mpz_t(), radical(mu_factors).get_mpz_t()) != 0;
  out.base_member = is_mu_sondow(out.n_factorization, sign(mu)).member;
  return out;
}

GcdReduction reduce_by_gcd(const Factorization& f, const BigInt& mu) {
  if (mu == 0 || !is_mu_sondow(f, mu).member) {
    throw Error(ErrorKind::NotASondowNumber,
                to_decimal(f.value()) + " is not " + to_decimal(mu) + "-Sondow");
  }
  GcdReduction out;
  out.delta = gcd(f.value(), mu);
  // δ | n, so its factorization is read off n's own.
  std::vector<PrimePower> delta_factors;
  for (const auto& [p, e] : f.factors()) {
    unsigned k = 0;
    BigInt rest = out.delta;
    while (k < e && mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++k;
    }
    if (k) delta_factors.push_back({p, k});
  }
  out.reduced = divide_exact(f, Factorization::from_primes(std::move(delta_factors)));
  out.reduced_mu = mu / out.delta;
  if (!is_squarefree(out.reduced)) {
    throw std::logic_error("reduce_by_gcd: " + to_decimal(out.reduced.value()) +
                           " is not square-free");
  }
  require_member(out.reduced, out.reduced_mu, "reduce_by_gcd");
  return out;
}

}  // namespace sondow
