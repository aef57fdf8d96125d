#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgv {

/// Dense univariate polynomial over a field `F`, lowest degree first.
///
/// `F` must provide construction from `long`, `is_zero()`, `inverse()`,
/// the four field operations, `==` and `to_string()`. The coefficient vector
/// never ends in a zero, so the zero polynomial has no coefficients at all.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coefficients) : c_(std::move(coefficients)) { trim(); }
  UPoly(std::initializer_list<F> coefficients) : c_(coefficients) { trim(); }

  static UPoly constant(F value) { return UPoly(std::vector<F>{std::move(value)}); }

  static UPoly monomial(F coefficient, std::size_t degree) {
    std::vector<F> c(degree + 1, F(0));
    c[degree] = std::move(coefficient);
    return UPoly(std::move(c));
  }

  static UPoly x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  F operator[](std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }

  const F& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  std::span<const F> coefficients() const { return c_; }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  F operator()(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Scales to leading coefficient 1; zero stays zero.
  UPoly monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
  }

  UPoly& operator+=(const UPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), F(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }

  UPoly& operator-=(const UPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), F(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly lhs, const UPoly& rhs) { return lhs += rhs; }
  friend UPoly operator-(UPoly lhs, const UPoly& rhs) { return lhs -= rhs; }
  UPoly operator-() const { return UPoly() - *this; }

  friend UPoly operator*(const UPoly& lhs, const UPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<F> out(lhs.c_.size() + rhs.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return UPoly(std::move(out));
  }

  friend UPoly operator*(UPoly lhs, const F& scalar) {
    for (auto& c : lhs.c_) c *= scalar;
    lhs.trim();
    return lhs;
  }

  friend bool operator==(const UPoly& lhs, const UPoly& rhs) { return lhs.c_ == rhs.c_; }

  /// Descending powers of `var`, e.g. "x^2 - 3*x + 1".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string coeff = "(" + c.to_string() + ")";
      std::string mon = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (!out.empty()) out += " + ";
      if (mon.empty()) {
        out += coeff;
      } else if (c == F(1)) {
        out += mon;
      } else {
        out += coeff + "*" + mon;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
struct DivMod {
  UPoly<F> quotient;
  UPoly<F> remainder;
};

/// Euclidean division. Throws std::domain_error on a zero divisor.
template <class F>
DivMod<F> divmod(const UPoly<F>& dividend, const UPoly<F>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UPoly<F>(), dividend};
  const F lead_inv = divisor.leading().inverse();
  std::vector<F> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<F> quo(static_cast<std::size_t>(dividend.degree() - dd + 1), F(0));
  for (int k = dividend.degree(); k >= dd; --k) {
    const F c = rem[static_cast<std::size_t>(k)] * lead_inv;
    quo[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UPoly<F>(std::move(quo)), UPoly<F>(std::move(rem))};
}

template <class F>
struct ExactQuotient {
  UPoly<F> quotient;
  bool exact = false;
};

/// Quotient together with a divisibility certificate (`exact` iff remainder is zero).
template <class F>
ExactQuotient<F> divide_exact(const UPoly<F>& dividend, const UPoly<F>& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  return {std::move(q), r.is_zero()};
}

/// Monic greatest common divisor. Throws std::invalid_argument if both inputs are zero.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct ExtendedGcd {
  UPoly<F> gcd;  // monic
  UPoly<F> s;    // s*a + t*b == gcd
  UPoly<F> t;
};

template <class F>
ExtendedGcd<F> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const F scale = r0.leading().inverse();
  return {r0 * scale, s0 * scale, t0 * scale};
}

/// f / gcd(f, f'), made monic. Throws std::invalid_argument on zero input.
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UPoly<F>::constant(F(1));
  const auto g = gcd(f, f.derivative());
  return divmod(f, g).quotient.monic();
}

/// Yun's algorithm: returns (factor, multiplicity) pairs with pairwise coprime,
/// squarefree, monic factors whose product (with multiplicities) is monic(f).
template <class F>
std::vector<std::pair<UPoly<F>, int>> squarefree_decomposition(const UPoly<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UPoly<F>, int>> out;
  if (f.degree() == 0) return out;
  const auto fp = f.derivative();
  auto a = gcd(f, fp);
  auto b = divmod(f, a).quotient;
  auto c = divmod(fp, a).quotient;
  auto d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    auto g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace cgv
