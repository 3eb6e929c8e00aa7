#include "sondow/factorization.hpp"

#include "sondow/primality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sondow {

namespace {

std::vector<PrimePower> canonicalize(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  std::vector<PrimePower> out;
  out.reserve(factors.size());
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().prime == f.prime) {
      out.back().exponent += f.exponent;
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

BigInt product_of(std::span<const PrimePower> factors) {
  BigInt value = 1;
  for (const auto& f : factors) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    value *= power;
  }
  return value;
}

}  // namespace

Factorization Factorization::from_primes(std::vector<PrimePower> factors) {
  Factorization out;
  out.factors_ = canonicalize(std::move(factors));
  out.value_ = product_of(out.factors_);
  return out;
}

Factorization Factorization::from_claimed(const BigInt& claimed_value,
                                          std::vector<PrimePower> factors) {
  if (claimed_value < 1) {
    throw Error(ErrorKind::InvalidHint, "claimed value must be positive");
  }
  for (const auto& f : factors) {
    if (f.exponent == 0) {
      throw Error(ErrorKind::InvalidHint, "exponent 0 for factor " + to_decimal(f.prime));
    }
    if (!sondow::is_prime(f.prime)) {
      throw Error(ErrorKind::InvalidHint, "claimed factor " + to_decimal(f.prime) + " is not prime");
    }
  }
  Factorization out = from_primes(std::move(factors));
  if (out.value_ != claimed_value) {
    throw Error(ErrorKind::InvalidHint, "claimed factors multiply to " + to_decimal(out.value_) +
                                            ", not " + to_decimal(claimed_value));
  }
  return out;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    os << factors_[i].prime.get_str();
    if (factors_[i].exponent > 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> all(a.factors().begin(), a.factors().end());
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  return Factorization::from_primes(std::move(all));
}

Factorization divide_exact(const Factorization& a, const Factorization& b) {
  std::vector<PrimePower> out(a.factors().begin(), a.factors().end());
  for (const auto& d : b.factors()) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const PrimePower& f) { return f.prime == d.prime; });
    if (it == out.end() || it->exponent < d.exponent) {
      throw Error(ErrorKind::NotAMultiple,
                  to_decimal(b.value()) + " does not divide " + to_decimal(a.value()));
    }
    it->exponent -= d.exponent;
  }
  return Factorization::from_primes(std::move(out));
}

FactorizationIncomplete::FactorizationIncomplete(std::vector<PrimePower> found, BigInt cofactor)
    : Error(ErrorKind::BudgetExceeded,
            "factorization budget exceeded; unfactored cofactor " + to_decimal(cofactor)),
      found_(canonicalize(std::move(found))),
      cofactor_(std::move(cofactor)) {}

std::span<const std::uint32_t> primes_up_to(std::uint32_t limit) {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<bool> composite(kTrialTableLimit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= kTrialTableLimit; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialTableLimit; j += i) composite[j] = true;
    }
    return primes;
  }();
  limit = std::min(limit, kTrialTableLimit);
  auto end = std::upper_bound(table.begin(), table.end(), limit);
  return {table.data(), static_cast<std::size_t>(end - table.begin())};
}

namespace {

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Returns a nontrivial factor of the odd composite n or 0 when the iteration
// allowance runs out.
std::uint64_t brent_rho(std::uint64_t n, std::uint64_t c, std::uint64_t& allowance) {
  constexpr std::uint64_t kBatch = 128;
  auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      std::uint64_t steps = std::min(kBatch, r - k);
      if (allowance < steps) return 0;
      allowance -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

BigInt brent_rho(const BigInt& n, unsigned long c, std::uint64_t& allowance) {
  constexpr std::uint64_t kBatch = 128;
  BigInt y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      std::uint64_t steps = std::min(kBatch, r - k);
      if (allowance < steps) return 0;
      allowance -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        step(y);
        diff = x - y;
        q *= diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(BigInt(x - ys), n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

// Splits a composite with no prime factor below the trial bound.
BigInt find_factor(const BigInt& n, std::uint64_t& allowance) {
  // Perfect powers defeat rho's gcd trick often enough to test for directly.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) return root;
    }
  }
  for (unsigned long c = 1; allowance > 0; ++c) {
    if (auto small = to_u64(n)) {
      std::uint64_t d = brent_rho(*small, c, allowance);
      if (d != 0) return from_u64(d);
    } else {
      BigInt d = brent_rho(n, c, allowance);
      if (d != 0) return d;
    }
  }
  return 0;
}

}  // namespace

Factorization factorize(std::uint64_t n, const FactorBudget& budget) {
  if (n < 1) throw Error(ErrorKind::Domain, "factorize: n must be >= 1, got 0");
  std::vector<PrimePower> found;
  std::uint64_t rest = n;
  bool trial_complete = false;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(
           std::min<std::uint64_t>(budget.trial_limit, kTrialTableLimit)))) {
    if (std::uint64_t{p} * p > rest) {
      trial_complete = true;
      break;
    }
    if (rest % p == 0) {
      unsigned e = 0;
      do {
        rest /= p;
        ++e;
      } while (rest % p == 0);
      found.push_back({BigInt(p), e});
    }
  }
  if (rest == 1) return Factorization::from_primes(std::move(found));
  if (trial_complete || sondow::is_prime(rest)) {
    found.push_back({from_u64(rest), 1});
    return Factorization::from_primes(std::move(found));
  }

  std::uint64_t allowance = budget.rho_iterations;
  std::vector<std::uint64_t> pending{rest};
  while (!pending.empty()) {
    std::uint64_t m = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (sondow::is_prime(m)) {
      found.push_back({from_u64(m), 1});
      continue;
    }
    BigInt d = find_factor(from_u64(m), allowance);
    if (d == 0) {
      BigInt cofactor = from_u64(m);
      for (std::uint64_t other : pending) cofactor *= from_u64(other);
      throw FactorizationIncomplete(std::move(found), std::move(cofactor));
    }
    std::uint64_t small = *to_u64(d);
    pending.push_back(m / small);
    pending.push_back(small);
  }
  return Factorization::from_primes(std::move(found));
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw Error(ErrorKind::Domain, "factorize: n must be >= 1, got " + to_decimal(n));
  if (auto small = to_u64(n)) return factorize(*small, budget);
  std::vector<PrimePower> found;
  BigInt rest = n;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(
           std::min<std::uint64_t>(budget.trial_limit, kTrialTableLimit)))) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      found.push_back({BigInt(p), e});
      if (auto small = to_u64(rest)) {
        // Finish in native arithmetic; primes below p are already gone.
        try {
          Factorization tail = factorize(*small, budget);
          found.insert(found.end(), tail.factors().begin(), tail.factors().end());
        } catch (const FactorizationIncomplete& partial) {
          found.insert(found.end(), partial.found().begin(), partial.found().end());
          throw FactorizationIncomplete(std::move(found), partial.cofactor());
        }
        return Factorization::from_primes(std::move(found));
      }
    }
  }

  std::uint64_t allowance = budget.rho_iterations;
  std::vector<BigInt> pending{rest};
  while (!pending.empty()) {
    BigInt m = std::move(pending.back());
    pending.pop_back();
    if (m == 1) continue;
    if (sondow::is_prime(m)) {
      found.push_back({m, 1});
      continue;
    }
    BigInt d = find_factor(m, allowance);
    if (d == 0) {
      BigInt cofactor = m;
      for (const auto& other : pending) cofactor *= other;
      throw FactorizationIncomplete(std::move(found), std::move(cofactor));
    }
    pending.push_back(BigInt(m / d));
    pending.push_back(std::move(d));
  }
  return Factorization::from_primes(std::move(found));
}

}  // namespace sondow
