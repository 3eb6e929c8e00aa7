#include "sondow/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sondow {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

BasePrimes base_primes_for(std::uint64_t hi) {
  std::uint64_t root = isqrt(hi);
  if (root <= kTrialTableLimit) {
    auto table = primes_up_to(static_cast<std::uint32_t>(root));
    return std::make_shared<const BasePrimeTable>(
        BasePrimeTable{root, std::vector<std::uint32_t>(table.begin(), table.end())});
  }
  std::vector<bool> composite(root + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += i) composite[j] = true;
  }
  return std::make_shared<const BasePrimeTable>(BasePrimeTable{root, std::move(primes)});
}

SpfSegment SpfSegment::build(std::uint64_t lo, std::uint64_t hi, std::uint64_t max_entries) {
  return build(lo, hi, base_primes_for(hi), max_entries);
}

SpfSegment SpfSegment::build(std::uint64_t lo, std::uint64_t hi, BasePrimes base,
                             std::uint64_t max_entries) {
  if (lo < 2 || lo > hi || hi >= kSieveValueLimit) {
    throw Error(ErrorKind::RangeError, "sieve segment needs 2 <= lo <= hi < 2^62, got [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (hi - lo >= max_entries) {
    throw Error(ErrorKind::SegmentTooLarge,
                "segment of " + std::to_string(hi - lo + 1) + " entries exceeds " +
                    std::to_string(max_entries));
  }
  if (!base || base->root < isqrt(hi)) base = base_primes_for(hi);

  SpfSegment seg;
  seg.lo_ = lo;
  seg.hi_ = hi;
  seg.base_ = std::move(base);
  const std::size_t size = hi - lo + 1;
  seg.spf_.assign(size, 0);
  seg.quotient_sum_.assign(size, 0);
  // Product of the sieved prime powers dividing each entry.
  std::vector<std::uint64_t> smooth(size, 1);

  for (std::uint32_t p32 : seg.base_->primes) {
    const std::uint64_t p = p32;
    if (p * p > hi) break;
    std::uint64_t k = (lo + p - 1) / p;
    for (std::uint64_t m = k * p; m <= hi; m += p, ++k) {
      const std::size_t i = m - lo;
      smooth[i] *= p;
      seg.quotient_sum_[i] += k;
      if (seg.spf_[i] == 0 && k > 1) seg.spf_[i] = p32;
    }
    for (std::uint64_t pk = p * p; pk <= hi; pk *= p) {
      for (std::uint64_t m = (lo + pk - 1) / pk * pk; m <= hi; m += pk) smooth[m - lo] *= p;
      if (pk > hi / p) break;
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    const std::uint64_t n = lo + i;
    // Whatever the base primes leave behind is 1 or a single prime > sqrt(hi).
    if (smooth[i] != n) seg.quotient_sum_[i] += smooth[i];
  }
  return seg;
}

std::size_t SpfSegment::index_of(std::uint64_t n) const {
  if (n < lo_ || n > hi_) {
    throw Error(ErrorKind::OutOfRange, std::to_string(n) + " outside segment [" +
                                           std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  }
  return n - lo_;
}

std::uint64_t SpfSegment::spf(std::uint64_t n) const {
  std::uint32_t p = spf_[index_of(n)];
  return p == 0 ? n : p;
}

std::uint64_t SpfSegment::prime_quotient_sum(std::uint64_t n) const {
  return quotient_sum_[index_of(n)];
}

Factorization SpfSegment::factorize(std::uint64_t n) const {
  std::uint64_t p = spf(n);
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  auto strip = [&](std::uint64_t q) {
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e) factors.push_back({from_u64(q), e});
  };
  strip(p);
  if (rest > 1) {
    const auto& primes = base_->primes;
    auto it = std::upper_bound(primes.begin(), primes.end(), p);
    for (; it != primes.end() && std::uint64_t{*it} * *it <= rest; ++it) strip(*it);
    if (rest > 1) factors.push_back({from_u64(rest), 1});
  }
  return Factorization::from_primes(std::move(factors));
}

}  // namespace sondow
