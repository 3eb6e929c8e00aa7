#pragma once

#include "sondow/factorization.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sondow {

/// One "index value" line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index = 0;
  BigInt value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parses b-file text: "index value" per line, '#' comments and blank lines
/// skipped. Parse error (with line number) on malformed lines, Format error
/// when indices do not strictly increase or a value is not positive.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// A caller-supplied factorization, validated on construction (every prime
/// passes is_prime, product equals the claimed value).
struct FactorListInput {
  BigInt claimed_value;
  Factorization factorization;
};

/// Hint files are JSON Lines: {"n": "<decimal>", "factors": [["p", e], ...]},
/// the same factor layout as search records. Invalid hints are InvalidHint
/// errors, malformed lines Parse errors.
std::vector<FactorListInput> parse_factor_hints(std::string_view text);

/// Parses "p^e,p^e,..." (exponent optional) and validates it against value.
FactorListInput parse_factor_spec(const BigInt& value, std::string_view spec);

struct CorpusPredicate {
  enum class Kind { Giuga, WeakPpp, PrimaryPpp, Sondow };
  Kind kind = Kind::Giuga;
  BigInt mu;  // Sondow only

  /// "giuga", "weak_ppp", "primary_ppp", or "sondow:<mu>".
  static CorpusPredicate parse(std::string_view name);
  std::string name() const;
};

enum class CrosscheckOutcome { Pass, Fail, Skipped };

struct CrosscheckEntry {
  std::int64_t index = 0;
  BigInt value;
  CrosscheckOutcome outcome = CrosscheckOutcome::Skipped;
  std::string note;
};

struct CrosscheckReport {
  std::vector<CrosscheckEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  std::vector<BigInt> failures() const;
};

/// Evaluates the predicate on every entry. Factorizations come from a
/// matching hint when one exists, otherwise from factorize within budget; an
/// entry that cannot be factored is Skipped, never guessed.
CrosscheckReport crosscheck(const std::vector<BFileEntry>& entries, const CorpusPredicate& predicate,
                            const std::vector<FactorListInput>& hints = {},
                            const FactorBudget& budget = {});

}  // namespace sondow
