#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sondow {

/// Arbitrary-precision signed integer (GMP).
using BigInt = mpz_class;

/// Parses an optionally signed decimal string. Rejects empty input,
/// whitespace, and non-digit characters.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

BigInt from_u64(std::uint64_t value);
BigInt from_i64(std::int64_t value);

std::optional<std::uint64_t> to_u64(const BigInt& value);
std::optional<std::int64_t> to_i64(const BigInt& value);

/// Mathematical (non-negative) residue of value mod m, m > 0.
BigInt mod_floor(const BigInt& value, const BigInt& m);

}  // namespace sondow
