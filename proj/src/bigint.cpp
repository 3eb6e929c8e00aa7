#include "sondow/bigint.hpp"

#include "sondow/errors.hpp"

#include <limits>

namespace sondow {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::SegmentTooLarge: return "segment-size";
    case ErrorKind::InvalidExponent: return "invalid-exponent";
    case ErrorKind::OracleBoundExceeded: return "oracle-bound-exceeded";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::PreconditionFailed: return "precondition-failed";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::RadicalConditionFailed: return "radical-condition-failed";
    case ErrorKind::MembershipFailed: return "membership-failed";
    case ErrorKind::NotAMultiple: return "not-a-multiple";
    case ErrorKind::NotASondowNumber: return "not-a-sondow-number";
    case ErrorKind::RangeError: return "range-error";
    case ErrorKind::CheckpointParse: return "checkpoint-parse-error";
    case ErrorKind::CheckpointMismatch: return "checkpoint-mismatch";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Format: return "format-error";
    case ErrorKind::InvalidHint: return "invalid-hint";
  }
  return "unknown";
}

BigInt parse_bigint(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
    }
  }
  // GMP does not accept a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

BigInt from_i64(std::int64_t value) {
  if (value >= 0) return from_u64(static_cast<std::uint64_t>(value));
  // Negate in unsigned arithmetic so INT64_MIN is representable.
  BigInt out = from_u64(0 - static_cast<std::uint64_t>(value));
  return -out;
}

std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

std::optional<std::int64_t> to_i64(const BigInt& value) {
  if (sgn(value) >= 0) {
    auto u = to_u64(value);
    if (!u || *u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return std::nullopt;
    }
    return static_cast<std::int64_t>(*u);
  }
  BigInt magnitude = -value;
  auto u = to_u64(magnitude);
  if (!u || *u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(0 - *u);
}

BigInt mod_floor(const BigInt& value, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace sondow
