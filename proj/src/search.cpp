#include "sondow/search.hpp"

#include "sondow/errors.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sondow {

namespace {

std::uint64_t magnitude(std::int64_t mu) {
  return mu < 0 ? 0 - static_cast<std::uint64_t>(mu) : static_cast<std::uint64_t>(mu);
}

std::vector<SearchRecord> scan_segment(std::int64_t mu, std::uint64_t lo, std::uint64_t hi,
                                       const SearchOptions& options, const BasePrimes& base) {
  const SpfSegment seg = SpfSegment::build(lo, hi, base, options.segment_size);
  const bool negative = mu < 0;
  const std::uint64_t m = magnitude(mu);
  const BigInt mu_big = from_i64(mu);

  std::vector<SearchRecord> hits;
  const std::size_t size = seg.size();
  for (std::size_t i = 0; i < size; ++i) {
    const std::uint64_t n = lo + i;
    const std::uint64_t sum = seg.prime_quotient_sum_at(i);
    // Σ n/p + μ ≡ 0 (mod n). sum < 2^63 and |μ| <= 2^63, so no overflow.
    bool hit;
    if (!negative) {
      hit = (sum + m) % n == 0;
    } else {
      hit = sum % n == (m < n ? m : m % n);
    }
    if (!hit) continue;

    Factorization f = seg.factorize(n);
    const bool composite = f.is_composite();
    if (options.composite_only && !composite) continue;
    if (!is_mu_sondow(f, mu_big).member) {
      throw std::logic_error("sieve hit " + std::to_string(n) +
                             " failed prime-power re-verification");
    }
    CharacterizationFlags flags = classify(f, mu_big, options.oracle_bounds);
    hits.push_back({n, mu, std::move(f), flags, composite});
  }
  return hits;
}

}  // namespace

std::uint64_t scan_range(std::int64_t mu, std::uint64_t lo, std::uint64_t hi,
                         const SearchOptions& options, const RecordSink& sink,
                         const SegmentDone& on_segment_done) {
  if (lo < 2 || lo > hi || hi >= kSieveValueLimit) {
    throw Error(ErrorKind::RangeError, "search range needs 2 <= lo <= hi < 2^62, got [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (options.segment_size == 0) throw Error(ErrorKind::RangeError, "segment size must be > 0");
  const BasePrimes base = base_primes_for(hi);
  const std::uint64_t step = options.segment_size;
  const std::uint64_t segments = (hi - lo) / step + 1;
  auto segment_lo = [&](std::uint64_t k) { return lo + k * step; };
  auto segment_hi = [&](std::uint64_t k) {
    return std::min(hi, segment_lo(k) + (step - 1));
  };

  if (options.jobs <= 1) {
    for (std::uint64_t k = 0; k < segments; ++k) {
      for (const auto& r : scan_segment(mu, segment_lo(k), segment_hi(k), options, base)) sink(r);
      const std::uint64_t next = segment_hi(k) + 1;
      if (on_segment_done && !on_segment_done(next) && k + 1 < segments) return next;
    }
    return hi + 1;
  }

  // Workers claim segment indices in order; the calling thread emits finished
  // segments strictly in index order. Workers stay within `window` segments of
  // the emission point to bound buffered memory.
  const std::uint64_t window = 2 * std::uint64_t{options.jobs};
  std::mutex mutex;
  std::condition_variable cv;
  std::map<std::uint64_t, std::vector<SearchRecord>> finished;
  std::uint64_t next_emit = 0;
  bool stop = false;
  std::exception_ptr failure;
  std::atomic<std::uint64_t> next_claim{0};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t k = next_claim.fetch_add(1);
      if (k >= segments) return;
      {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return stop || k < next_emit + window; });
        if (stop) return;
      }
      try {
        auto records = scan_segment(mu, segment_lo(k), segment_hi(k), options, base);
        std::lock_guard lock(mutex);
        finished.emplace(k, std::move(records));
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
      cv.notify_all();
    }
  };

  std::uint64_t resume_at = hi + 1;
  {
    std::vector<std::jthread> pool;
    pool.reserve(options.jobs);
    for (unsigned j = 0; j < options.jobs; ++j) pool.emplace_back(worker);

    for (std::uint64_t k = 0; k < segments; ++k) {
      std::vector<SearchRecord> records;
      {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return failure || finished.count(k) > 0; });
        if (failure) break;
        records = std::move(finished[k]);
        finished.erase(k);
      }
      bool keep_going = true;
      try {
        for (const auto& r : records) sink(r);
        const std::uint64_t next = segment_hi(k) + 1;
        keep_going = !on_segment_done || on_segment_done(next) || k + 1 == segments;
        if (!keep_going) resume_at = next;
      } catch (...) {
        std::lock_guard lock(mutex);
        failure = std::current_exception();
        keep_going = false;
      }
      {
        std::lock_guard lock(mutex);
        next_emit = k + 1;
        if (!keep_going) stop = true;
      }
      cv.notify_all();
      if (!keep_going) break;
    }
    {
      std::lock_guard lock(mutex);
      stop = true;
    }
    cv.notify_all();
  }
  if (failure) std::rethrow_exception(failure);
  return resume_at;
}

std::vector<SearchRecord> search_range(std::int64_t mu, std::uint64_t lo, std::uint64_t hi,
                                       const SearchOptions& options) {
  std::vector<SearchRecord> out;
  scan_range(mu, lo, hi, options, [&](const SearchRecord& r) { out.push_back(r); });
  return out;
}

namespace {

// Smallest member of S_μ in [lo, hi]. Windows start small and double so an
// early witness does not pay for a full-size segment.
std::optional<std::uint64_t> first_member(std::int64_t mu, std::uint64_t lo, std::uint64_t hi,
                                          const SearchOptions& options) {
  std::optional<std::uint64_t> found;
  SearchOptions opts = options;
  std::uint64_t width = std::min<std::uint64_t>(std::uint64_t{1} << 12, options.segment_size);
  for (std::uint64_t a = lo; a <= hi && !found;) {
    const std::uint64_t b = std::min(hi, a + (width - 1));
    opts.segment_size = std::min(width, options.segment_size);
    scan_range(
        mu, a, b, opts,
        [&](const SearchRecord& r) {
          if (!found) found = r.n;
        },
        [&](std::uint64_t) { return !found; });
    if (b == hi) break;
    a = b + 1;
    width = std::min(width * 2, options.segment_size * std::max(1u, options.jobs));
  }
  return found;
}

}  // namespace

ConjectureReport conjecture1_check(std::int64_t mu, const SearchOptions& options) {
  const std::uint64_t m = magnitude(mu);
  if (m < 2) throw Error(ErrorKind::RangeError, "conjecture 1 interval [2, |mu|] is empty");
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.mu = mu;
  report.lo = 1;
  report.hi = m;
  report.witness = first_member(mu, 2, m, options);
  report.exhausted = !report.witness;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

ConjectureReport conjecture2_search(std::int64_t mu, std::uint64_t bound,
                                    const SearchOptions& options) {
  const std::uint64_t m = magnitude(mu);
  if (bound <= m) {
    throw Error(ErrorKind::RangeError, "conjecture 2 bound must exceed |mu| = " + std::to_string(m));
  }
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.mu = mu;
  report.lo = m;
  report.hi = bound;
  if (m == 0) {
    report.witness = 1;  // 1 is μ-Sondow for every μ
  } else {
    report.witness = first_member(mu, m + 1, bound, options);
  }
  report.exhausted = !report.witness;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<BigInt> residue_table(const std::vector<BigInt>& values, const BigInt& modulus) {
  if (modulus < 1) throw Error(ErrorKind::Domain, "residue modulus must be >= 1");
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(mod_floor(v, modulus));
  return out;
}

}  // namespace sondow
