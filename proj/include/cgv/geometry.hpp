#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cgv/mpoly.hpp"
#include "cgv/report.hpp"

namespace cgv {

/// Projective point [X:Y:Z:T] with exact coordinates.
using ProjPoint = std::array<NFElem, 4>;

/// The coordinate point with a 1 in position k (0 = X, ..., 3 = T).
ProjPoint reference_point(std::size_t k);
/// Scales so the first nonzero coordinate is 1. Throws on the zero vector.
ProjPoint normalized(const ProjPoint& p);
bool same_point(const ProjPoint& a, const ProjPoint& b);
/// "[0:0:1:0]"; coordinates printed canonically after normalization.
std::string point_to_string(const ProjPoint& p);
/// Substitutes the point's coordinates; other variables stay symbolic.
MPoly evaluate_at(const MPoly& f, const ProjPoint& p);

struct SignedCoord {
  std::size_t index;  // 0..3 for X, Y, Z, T
  int sign;           // +1 or -1
  friend bool operator==(const SignedCoord&, const SignedCoord&) = default;
};

/// Signed coordinate permutation of P^3: image coordinate k is
/// `sign_k * x[index_k]`. The only maps needed are permutations and sign changes.
class CoordMap {
 public:
  /// Throws std::invalid_argument unless the indices form a permutation and signs are +-1.
  explicit CoordMap(std::array<SignedCoord, 4> images);

  static CoordMap identity();
  /// (X, Y, Z, T) -> (T, X, Y, Z).
  static CoordMap sigma();

  const SignedCoord& image(std::size_t k) const { return images_[k]; }

  /// Point map `this(inner(p))`.
  CoordMap compose(const CoordMap& inner) const;
  CoordMap power(unsigned n) const;
  /// Smallest n >= 1 with power(n) equal to the identity (as a linear map).
  unsigned order() const;

  std::array<MPoly, 4> apply(const std::array<MPoly, 4>& point) const;
  ProjPoint apply(const ProjPoint& point) const;

  std::string to_string() const;

  friend bool operator==(const CoordMap&, const CoordMap&) = default;

 private:
  std::array<SignedCoord, 4> images_;
};

/// f o g, i.e. f evaluated at g(X, Y, Z, T).
MPoly apply_map(const MPoly& f, const CoordMap& g);

/// A line of P^3 parametrized by (X, Y): Z and T are signed copies of X or Y.
class LineSub {
 public:
  LineSub(std::string name, SignedCoord z_image, SignedCoord t_image);

  const std::string& name() const { return name_; }
  /// {Z -> ..., T -> ...}.
  Substitution substitution() const;
  /// (X, Y, z(X,Y), t(X,Y)).
  std::array<MPoly, 4> parametrization() const;
  /// Point of the line with parameters (x : y).
  ProjPoint point(const NFElem& x, const NFElem& y) const;

 private:
  std::string name_;
  SignedCoord z_;
  SignedCoord t_;
};

/// r = {X + Z = Y + T = 0}.
LineSub line_r();
/// r' = {X - Z = Y - T = 0}.
LineSub line_r_prime();

/// Confirms that g fixes L pointwise (projectively) for all parameter values.
CheckReport fixed_line_check(const CoordMap& g, const LineSub& line);

/// The four cubics C_i = cofactor_i * Q_i with Q_i = (3r-2) * bracket_i + outer_i.
struct CubicFamily {
  std::array<MPoly, 4> cubics;
  std::array<MPoly, 4> quadrics;
  std::array<MPoly, 4> brackets;
  std::array<MPoly, 4> outer;
  std::array<Var, 4> cofactors{Var::T, Var::X, Var::Y, Var::Z};
  std::array<std::string_view, 4> printed;
};

/// Parses the printed cubics and verifies every factorization identity.
/// Throws std::logic_error if one fails.
CubicFamily build_cubics();

/// Built once on first use.
const CubicFamily& cubic_family();

/// The coefficient (3r - 2) shared by every bracket.
NFElem bracket_factor();

/// How the unbalanced printed brackets are read.
inline constexpr std::string_view kBracketReading =
    "bracket reading: C0 = T*{(3r-2)[(X+mY+r^2Z)T+(r+1)XY] + (-6r^2+2r+2)XZ + (-2r^2-5r+5)YZ}, "
    "the only reading consistent with the T=0 restrictions; C1..C3 by the cyclic relabeling";

/// Index j with f == family[j], if any.
std::optional<std::size_t> find_in_family(const MPoly& f, const std::array<MPoly, 4>& family);

}  // namespace cgv
