#include "sondow/predicates.hpp"

#include "sondow/arith.hpp"
#include "sondow/bernoulli.hpp"
#include "sondow/errors.hpp"
#include "sondow/primality.hpp"

namespace sondow {

namespace {

bool divides(const BigInt& d, const BigInt& value) {
  return mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool congruent_mod(const BigInt& a, const BigInt& b, const BigInt& n) {
  return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), n.get_mpz_t()) != 0;
}

}  // namespace

BigInt canonical_mu(const Factorization& f) {
  if (f.is_one()) return 0;
  return mod_floor(-prime_quotient_sum(f), f.value());
}

SondowVerdict is_mu_sondow(const Factorization& f, const BigInt& mu) {
  SondowVerdict v{f.value(), mu, true, {}};
  v.witnesses.reserve(f.factors().size());
  for (const auto& [p, s] : f.factors()) {
    BigInt ps;
    mpz_pow_ui(ps.get_mpz_t(), p.get_mpz_t(), s);
    BigInt residue = mod_floor(f.value() / p + mu, ps);
    if (residue != 0) v.member = false;
    v.witnesses.push_back({p, s, std::move(residue)});
  }
  return v;
}

bool congruence_sum_check(const Factorization& f, const BigInt& mu) {
  return divides(f.value(), prime_quotient_sum(f) + mu);
}

bool power_sum_check(const Factorization& f, const BigInt& mu, PowerSumExponent exponent,
                     std::uint64_t max_n) {
  auto n = to_u64(f.value());
  if (!n || *n > max_n) {
    throw Error(ErrorKind::OracleBoundExceeded,
                "power-sum oracle limited to n <= " + std::to_string(max_n));
  }
  if (*n == 1) return true;
  const BigInt k_big = exponent == PowerSumExponent::Phi ? euler_phi(f) : carmichael_lambda(f);
  const std::uint64_t k = *to_u64(k_big);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i < *n; ++i) {
    sum += mod_pow(i, k, *n);
    if (sum >= *n) sum -= *n;
  }
  return congruent_mod(from_u64(sum), mu, f.value());
}

BigInt power_sum_residue(const Factorization& f, const BigInt& k) {
  if (f.value() < 2) throw Error(ErrorKind::Domain, "power-sum residue needs n >= 2");
  if (k < 1 || mpz_odd_p(k.get_mpz_t())) {
    throw Error(ErrorKind::InvalidExponent, "power-sum residue needs a positive even k");
  }
  BigInt s = 0;
  for (const auto& pe : f.factors()) {
    if (divides(pe.prime - 1, k)) s += f.value() / pe.prime;
  }
  return mod_floor(-s, f.value());
}

bool bernoulli_check(const Factorization& f, const BigInt& mu, BernoulliMode mode,
                     std::uint32_t cap) {
  const BigInt& n = f.value();
  if (n <= 2) {
    // φ(n) = 1: n·B_1 = -n/2.
    return rational_congruent(ExactRational(-n, 2), ExactRational(mu), n);
  }
  const BigInt phi = euler_phi(f);
  if (mode == BernoulliMode::Congruence) {
    return congruent_mod(power_sum_residue(f, phi), mu, n);
  }
  auto k = to_u64(phi);
  if (!k || *k > cap) {
    throw Error(ErrorKind::OutOfRange,
                "exact Bernoulli oracle needs phi(n) <= " + std::to_string(cap));
  }
  ExactRational scaled = ExactRational(n) * bernoulli_number(static_cast<std::uint32_t>(*k), cap);
  return rational_congruent(scaled, ExactRational(mu), n);
}

ExactRational egyptian_sum(const Factorization& f, const BigInt& mu) {
  ExactRational sum(mu, f.value());
  for (const auto& pe : f.factors()) sum += ExactRational(1, pe.prime);
  return sum;
}

bool egyptian_check(const Factorization& f, const BigInt& mu) {
  return egyptian_sum(f, mu).is_integer();
}

bool derivative_check(const Factorization& f, const BigInt& mu) {
  if (mu != 1 && mu != -1) {
    throw Error(ErrorKind::Unsupported, "derivative characterization needs mu = 1 or mu = -1");
  }
  // n' = a·n - μ  ⟺  a = (n' + μ) / n, required to be an integer >= 1.
  BigInt shifted = arithmetic_derivative(f) + mu;
  return divides(f.value(), shifted) && shifted >= f.value();
}

bool is_giuga(const Factorization& f) {
  return f.is_composite() && is_mu_sondow(f, -1).member;
}

bool is_weak_ppp(const Factorization& f) { return is_mu_sondow(f, 1).member; }

bool is_primary_ppp(const Factorization& f) {
  if (f.is_one()) throw Error(ErrorKind::Domain, "primary pseudoperfect numbers start at n = 2");
  return egyptian_sum(f, 1) == ExactRational(1);
}

bool CharacterizationFlags::consistent() const noexcept {
  const bool v = divisibility;
  auto agrees = [v](const std::optional<bool>& flag) { return !flag || *flag == v; };
  return congruence_sum == v && egyptian == v && bernoulli_congruence == v &&
         agrees(power_sum) && agrees(power_sum_lambda) && agrees(bernoulli) &&
         agrees(derivative);
}

CharacterizationFlags classify(const Factorization& f, const BigInt& mu,
                               const OracleBounds& bounds) {
  CharacterizationFlags flags;
  flags.divisibility = is_mu_sondow(f, mu).member;
  flags.congruence_sum = congruence_sum_check(f, mu);
  flags.egyptian = egyptian_check(f, mu);
  flags.bernoulli_congruence = bernoulli_check(f, mu, BernoulliMode::Congruence);

  auto n = to_u64(f.value());
  if (n && *n <= bounds.power_sum_max_n) {
    flags.power_sum = power_sum_check(f, mu, PowerSumExponent::Phi, bounds.power_sum_max_n);
    flags.power_sum_lambda =
        power_sum_check(f, mu, PowerSumExponent::Lambda, bounds.power_sum_max_n);
  }
  if (euler_phi(f) <= bounds.bernoulli_cap) {
    flags.bernoulli = bernoulli_check(f, mu, BernoulliMode::ExactOracle, bounds.bernoulli_cap);
  }
  if (mu == 1 || (mu == -1 && f.is_composite())) flags.derivative = derivative_check(f, mu);
  return flags;
}

}  // namespace sondow
