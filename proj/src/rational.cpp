#include "cgv/rational.hpp"

#include <stdexcept>

namespace cgv {

BigRational::BigRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return BigRational(mpz_class(std::string(text), 10));
    return BigRational(mpz_class(std::string(text.substr(0, slash)), 10),
                       mpz_class(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class out;
  mpq_inv(out.get_mpq_t(), value_.get_mpq_t());
  return BigRational(std::move(out));
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace cgv
