#include "sondow/rational.hpp"

#include "sondow/errors.hpp"

namespace sondow {

ExactRational::ExactRational(const BigInt& integer) : value_(integer) {}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.value_ == 0) throw Error(ErrorKind::Domain, "division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const {
  ExactRational out;
  out.value_ = -value_;
  return out;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool rational_congruent(const ExactRational& r1, const ExactRational& r2, const BigInt& n) {
  if (n < 1) throw Error(ErrorKind::InvalidModulus, "rational congruence needs n >= 1");
  BigInt num = (r1 - r2).numerator();
  return mpz_divisible_p(num.get_mpz_t(), n.get_mpz_t()) != 0;
}

}  // namespace sondow
