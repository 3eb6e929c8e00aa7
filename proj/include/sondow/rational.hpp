#pragma once

#include "sondow/bigint.hpp"

#include <compare>
#include <string>

namespace sondow {

// Exact rational number, always held in lowest terms with a positive
// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(const BigInt& integer);  // NOLINT: implicit by intent
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or just "p" for integers.
  std::string to_string() const;

 private:
  mpq_class value_{0};
};

/// r1 ≡ r2 (mod n) in the rational sense: n divides the numerator of
/// r1 - r2 once reduced to lowest terms. No condition on the denominator.
bool rational_congruent(const ExactRational& r1, const ExactRational& r2, const BigInt& n);

}  // namespace sondow
