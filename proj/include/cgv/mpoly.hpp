#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cgv/number_field.hpp"

namespace cgv {

/// Polynomial variables. X, Y, Z, T are projective coordinates, m is the free
/// parameter of the cubic family, and A, B are auxiliary parameters used to
/// keep pencil coefficients (or a root parameter) symbolic.
enum class Var : std::uint8_t { X, Y, Z, T, m, A, B };

inline constexpr std::size_t kNumVars = 7;
inline constexpr std::array<Var, 4> kCoordinates{Var::X, Var::Y, Var::Z, Var::T};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

inline constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Graded lexicographic order with X > Y > Z > T > m > A > B; "less" means
/// printed first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/// Sparse polynomial over Q(r) in the variables of `Var`.
class MPoly {
 public:
  using TermMap = std::map<Exponents, NFElem, GrlexGreater>;

  MPoly() = default;
  MPoly(NFElem constant);  // NOLINT(google-explicit-constructor)
  MPoly(long constant) : MPoly(NFElem(constant)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Exponents& exponents, NFElem coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  NFElem constant_term() const;
  NFElem coefficient(const Exponents& exponents) const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(Var v) const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const;
  /// Homogeneous of some degree when only the listed variables are counted.
  bool is_homogeneous_in(std::span<const Var> vars) const;
  /// Largest degree of a term when only the listed variables are counted.
  int total_degree_in(std::span<const Var> vars) const;

  /// f = sum_k c_k * v^k; returns c_0 .. c_deg.
  std::vector<MPoly> coefficients_in(Var v) const;

  MPoly pow(unsigned exponent) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  MPoly operator-() const;

  friend bool operator==(const MPoly& lhs, const MPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Canonical text in grlex order, re-parseable by parse_poly.
  std::string to_string() const;

 private:
  void add_term(const Exponents& exponents, const NFElem& coefficient);

  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MPoly& f) { return os << f.to_string(); }

/// Assignment variable -> polynomial; unassigned variables map to themselves.
class Substitution {
 public:
  Substitution& set(Var v, MPoly image) {
    images_[index_of(v)] = std::move(image);
    return *this;
  }
  const MPoly* find(Var v) const {
    const auto& slot = images_[index_of(v)];
    return slot ? &*slot : nullptr;
  }

 private:
  std::array<std::optional<MPoly>, kNumVars> images_;
};

/// Ring-homomorphism image of f under the assignment.
MPoly mp_substitute(const MPoly& f, const Substitution& assignment);

/// Formal partial derivative.
MPoly mp_partial(const MPoly& f, Var v);

/// Value when every variable occurring in f is assigned a constant; throws
/// std::invalid_argument if a variable is left symbolic.
NFElem mp_evaluate(const MPoly& f, const Substitution& assignment);

/// Quotient of f by the nonzero scalar c.
MPoly scale(const MPoly& f, const NFElem& c);

/// Univariate view of a polynomial in `v` alone with scalar coefficients.
/// Throws std::invalid_argument if any other variable occurs.
UPoly<NFElem> to_upoly(const MPoly& f, Var v);
MPoly from_upoly(const UPoly<NFElem>& p, Var v);

}  // namespace cgv
