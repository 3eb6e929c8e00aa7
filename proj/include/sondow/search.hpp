#pragma once

#include "sondow/factorization.hpp"
#include "sondow/predicates.hpp"
#include "sondow/sieve.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sondow {

struct SearchRecord {
  std::uint64_t n = 0;
  std::int64_t mu = 0;
  Factorization factorization;
  CharacterizationFlags flags;
  bool composite = false;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct SearchOptions {
  bool composite_only = false;
  /// Worker threads; 1 runs everything on the calling thread.
  unsigned jobs = 1;
  std::uint64_t segment_size = kDefaultSegmentSize;
  /// Oracles run on every hit. The power-sum bound is kept low by default
  /// because a μ = -1 scan hits every prime.
  OracleBounds oracle_bounds{10'000, 500};
};

using RecordSink = std::function<void(const SearchRecord&)>;
/// Called after all records of a segment have been emitted, with the low end
/// of the next segment. Returning false stops the scan at that boundary.
using SegmentDone = std::function<bool(std::uint64_t next_segment_lo)>;

/// Streams every n in [lo, hi] with Σ_{p|n} n/p + μ ≡ 0 (mod n), in
/// increasing order. Segments are [lo + k·segment_size, ...]. Each hit is
/// factored from its sieve segment, re-checked prime power by prime power and
/// classified before emission. Output is identical for any jobs value.
/// Returns the first n not scanned (hi + 1 when the range was finished).
/// RangeError unless 2 <= lo <= hi < 2^62.
std::uint64_t scan_range(std::int64_t mu, std::uint64_t lo, std::uint64_t hi,
                         const SearchOptions& options, const RecordSink& sink,
                         const SegmentDone& on_segment_done = {});

/// Collecting wrapper around scan_range.
std::vector<SearchRecord> search_range(std::int64_t mu, std::uint64_t lo, std::uint64_t hi,
                                       const SearchOptions& options = {});

struct ConjectureReport {
  std::int64_t mu = 0;
  /// Scanned interval (lo, hi].
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::optional<std::uint64_t> witness;
  bool exhausted = false;
  std::chrono::nanoseconds wall_time{0};
};

/// Smallest member of S_μ in [2, |μ|], or exhausted. RangeError when |μ| < 2.
ConjectureReport conjecture1_check(std::int64_t mu, const SearchOptions& options = {});

/// Smallest member of S_μ in (|μ|, bound], or exhausted with the bound
/// recorded. RangeError when bound <= |μ|.
ConjectureReport conjecture2_search(std::int64_t mu, std::uint64_t bound,
                                    const SearchOptions& options = {});

/// value mod modulus for each value, order preserved. Domain error for
/// modulus < 1.
std::vector<BigInt> residue_table(const std::vector<BigInt>& values, const BigInt& modulus);

// --- JSON Lines records --------------------------------------------------

/// One JSON object, no trailing newline: keys n, mu, factors, flags, composite.
/// Integers are decimal strings; absent flags are null.
std::string to_jsonl(const SearchRecord& record);

/// Parses and validates one record line (factor list checked with
/// Factorization::from_claimed). Parse error on malformed input.
SearchRecord parse_jsonl_record(std::string_view line);

/// "factors" array of a record, used for factor hints as well.
std::vector<PrimePower> parse_factor_list_json(std::string_view json_array);

// --- Checkpoints -----------------------------------------------------------

struct Checkpoint {
  std::int64_t mu = 0;
  std::uint64_t next_segment_lo = 0;
  std::vector<SearchRecord> records_so_far;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Writes the checkpoint as one JSON document (write-then-rename).
void checkpoint_save(const Checkpoint& state, const std::filesystem::path& path);

/// Reads and validates a checkpoint. CheckpointParse for unreadable, empty or
/// malformed files and for records that break the stream invariants;
/// CheckpointMismatch when the stored μ differs from expected_mu.
Checkpoint checkpoint_resume(const std::filesystem::path& path, std::int64_t expected_mu);

}  // namespace sondow
