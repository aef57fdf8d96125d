#pragma once

#include <array>
#include <vector>

#include "cgv/rational.hpp"
#include "cgv/report.hpp"

namespace cgv {

/// h * pi^*H + sum e_i E_i on the blown-up surface.
struct DivisorClass {
  long h = 0;
  std::array<long, 4> e{};

  static DivisorClass hyperplane() { return {1, {}}; }
  static DivisorClass exceptional(std::size_t i);
  /// E_1 + E_2 + E_3 + E_4.
  static DivisorClass exceptional_sum() { return {0, {1, 1, 1, 1}}; }

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(long k, DivisorClass d);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// "pi*(3H) - 3*sum(E)" style when the e_i agree, otherwise "3H - 1E1 ...".
  std::string to_string() const;
};

/// H.H = hyperplane_square, H.E_i = 0, E_i.E_j = -delta_ij.
struct IntersectionForm {
  long hyperplane_square = 5;

  long pair(const DivisorClass& a, const DivisorClass& b) const;
};

/// Pairing with the default form (H^2 = 5).
long pair(const DivisorClass& a, const DivisorClass& b);

/// K_V = H - sum E_i.
DivisorClass canonical_class();

/// Genus of each exceptional curve (they are elliptic).
inline constexpr long kExceptionalGenus = 1;

/// n_i in n K_V = pi^*(nH) + n_i sum E_i, from adjunction on the elliptic E_i.
/// Throws std::invalid_argument for n <= 0.
long exceptional_multiplicity(long n, const IntersectionForm& form = {});

/// (D^2 + K_V.D)/2 + 1.
BigRational adjunction_genus(const DivisorClass& d, const IntersectionForm& form = {});

/// One report per n in {1, 2, 3, 5}.
std::vector<CheckReport> divisor_reports();

}  // namespace cgv
