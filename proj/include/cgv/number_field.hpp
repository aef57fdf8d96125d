#pragma once

#include <array>
#include <ostream>
#include <string>

#include "cgv/rational.hpp"
#include "cgv/upoly.hpp"

namespace cgv {

/// Element c0 + c1*r + c2*r^2 of Q(r), where r^3 + r^2 - 1 = 0.
///
/// Values are kept fully reduced, so structural equality is field equality.
class NFElem {
 public:
  NFElem() = default;
  NFElem(long value) : c_{BigRational(value), {}, {}} {}  // NOLINT(google-explicit-constructor)
  NFElem(BigRational value) : c_{std::move(value), {}, {}} {}  // NOLINT(google-explicit-constructor)
  NFElem(BigRational c0, BigRational c1, BigRational c2)
      : c_{std::move(c0), std::move(c1), std::move(c2)} {}

  /// The generator r.
  static NFElem generator() { return NFElem(0, 1, 0); }

  /// Coefficient of r^i, i in {0, 1, 2}.
  const BigRational& coeff(std::size_t i) const { return c_.at(i); }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }

  /// Throws std::domain_error on zero.
  NFElem inverse() const;
  NFElem pow(unsigned exponent) const;

  NFElem& operator+=(const NFElem& rhs);
  NFElem& operator-=(const NFElem& rhs);
  NFElem& operator*=(const NFElem& rhs);
  NFElem& operator/=(const NFElem& rhs) { return *this *= rhs.inverse(); }

  friend NFElem operator+(NFElem lhs, const NFElem& rhs) { return lhs += rhs; }
  friend NFElem operator-(NFElem lhs, const NFElem& rhs) { return lhs -= rhs; }
  friend NFElem operator*(NFElem lhs, const NFElem& rhs) { return lhs *= rhs; }
  friend NFElem operator/(NFElem lhs, const NFElem& rhs) { return lhs /= rhs; }
  NFElem operator-() const { return NFElem(-c_[0], -c_[1], -c_[2]); }

  friend bool operator==(const NFElem& lhs, const NFElem& rhs) = default;

  /// Canonical form: ascending powers of r, reduced fractions, explicit signs,
  /// e.g. "10 + 4*r - 20*r^2", "-r", "3/4*r^2", "0".
  std::string to_string() const;

  /// Coordinates as a polynomial in r of degree < 3.
  UPoly<BigRational> to_upoly() const { return UPoly<BigRational>({c_[0], c_[1], c_[2]}); }

 private:
  std::array<BigRational, 3> c_;
};

inline std::ostream& operator<<(std::ostream& os, const NFElem& a) { return os << a.to_string(); }

/// r^3 + r^2 - 1.
const UPoly<BigRational>& minimal_polynomial();

/// Unique representative of degree < 3 of `p` modulo r^3 + r^2 - 1.
NFElem nf_reduce(const UPoly<BigRational>& p);

/// Multiplicative inverse via the extended Euclidean algorithm against the
/// minimal polynomial. Throws std::domain_error on zero.
NFElem nf_invert(const NFElem& a);

}  // namespace cgv
