#pragma once

#include "sondow/factorization.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace sondow {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 22;
/// Sieved values must stay below this so prime-quotient sums fit in 64 bits.
inline constexpr std::uint64_t kSieveValueLimit = std::uint64_t{1} << 62;

/// Ascending primes up to `root`. Shared so consecutive segments of one scan
/// reuse a single table.
struct BasePrimeTable {
  std::uint64_t root = 0;
  std::vector<std::uint32_t> primes;
};
using BasePrimes = std::shared_ptr<const BasePrimeTable>;

/// Table of every prime p with p * p <= hi.
BasePrimes base_primes_for(std::uint64_t hi);

// Smallest-prime-factor table over [lo, hi], built by a segmented sieve of
// Eratosthenes. Alongside spf it records, for every n in the segment, the
// prime-quotient sum Σ_{p|n} n/p (distinct primes), which is what the
// Sondow scan tests modulo n.
//
// Immutable after build(); safe to read from several threads.
class SpfSegment {
 public:
  /// Requires 2 <= lo <= hi < kSieveValueLimit (else RangeError) and
  /// hi - lo + 1 <= max_entries (else SegmentTooLarge).
  static SpfSegment build(std::uint64_t lo, std::uint64_t hi,
                          std::uint64_t max_entries = kDefaultSegmentSize);
  /// Same, reusing a base table that covers hi.
  static SpfSegment build(std::uint64_t lo, std::uint64_t hi, BasePrimes base,
                          std::uint64_t max_entries = kDefaultSegmentSize);

  std::uint64_t lo() const noexcept { return lo_; }
  std::uint64_t hi() const noexcept { return hi_; }
  std::uint64_t size() const noexcept { return hi_ - lo_ + 1; }

  /// Smallest prime factor of n; spf(n) == n exactly when n is prime.
  /// Throws OutOfRange for n outside [lo, hi].
  std::uint64_t spf(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const { return spf(n) == n; }

  /// Σ over distinct primes p | n of n / p.
  std::uint64_t prime_quotient_sum(std::uint64_t n) const;

  /// Unchecked index access for scan loops: entry i is n = lo + i.
  std::uint64_t prime_quotient_sum_at(std::size_t i) const noexcept { return quotient_sum_[i]; }

  /// Canonical factorization of n. Starts from the stored smallest prime
  /// factor and continues through the base primes above it, so the work is
  /// bounded by the number of base primes rather than by n.
  Factorization factorize(std::uint64_t n) const;

 private:
  SpfSegment() = default;
  std::size_t index_of(std::uint64_t n) const;

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  BasePrimes base_;
  // 0 marks a prime entry (its spf is itself); every spf below 2^31 fits.
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> quotient_sum_;
};

}  // namespace sondow
