#include "cgv/number_field.hpp"

#include <stdexcept>

namespace cgv {

const UPoly<BigRational>& minimal_polynomial() {
  static const UPoly<BigRational> poly({BigRational(-1), BigRational(0), BigRational(1), BigRational(1)});
  return poly;
}

NFElem nf_reduce(const UPoly<BigRational>& p) {
  const auto rem = divmod(p, minimal_polynomial()).remainder;
  return NFElem(rem[0], rem[1], rem[2]);
}

NFElem nf_invert(const NFElem& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero in Q(r)");
  // The minimal polynomial is irreducible, so the gcd is 1 and s*a == 1 mod it.
  const auto eg = extended_gcd(a.to_upoly(), minimal_polynomial());
  if (eg.gcd.degree() != 0) throw std::logic_error("minimal polynomial shares a factor with an element");
  return nf_reduce(eg.s);
}

NFElem NFElem::inverse() const { return nf_invert(*this); }

NFElem NFElem::pow(unsigned exponent) const {
  NFElem base = *this;
  NFElem acc(1);
  while (exponent != 0) {
    if ((exponent & 1U) != 0) acc *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return acc;
}

NFElem& NFElem::operator+=(const NFElem& rhs) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] += rhs.c_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& rhs) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& rhs) {
  const auto& a = c_;
  const auto& b = rhs.c_;
  const BigRational p0 = a[0] * b[0];
  const BigRational p1 = a[0] * b[1] + a[1] * b[0];
  const BigRational p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  const BigRational p3 = a[1] * b[2] + a[2] * b[1];
  const BigRational p4 = a[2] * b[2];
  // r^3 = 1 - r^2, r^4 = -1 + r + r^2
  c_ = {p0 + p3 - p4, p1 + p4, p2 - p3 + p4};
  return *this;
}

std::string NFElem::to_string() const {
  static const char* const kMonomials[] = {"", "r", "r^2"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    const BigRational& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigRational mag = c.abs();
    if (i == 0) {
      out += mag.to_string();
    } else if (mag == BigRational(1)) {
      out += kMonomials[i];
    } else {
      out += mag.to_string() + "*" + kMonomials[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cgv
