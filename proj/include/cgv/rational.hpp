#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cgv {

/// Arbitrary-precision rational number.
///
/// Always held in lowest terms with a positive denominator, so two values are
/// equal exactly when their representations are equal. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const mpz_class& value) : value_(value) {}

  /// Throws std::domain_error on a zero denominator.
  BigRational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "n" or "n/d" with an optional leading sign.
  static BigRational from_string(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Throws std::domain_error when the value is zero.
  BigRational inverse() const;
  BigRational abs() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  /// Nearest double. Used only by diagnostics and test oracles.
  double to_double() const { return value_.get_d(); }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace cgv
