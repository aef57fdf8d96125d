#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgv/geometry.hpp"
#include "cgv/report.hpp"

namespace cgv {

/// A point in the affine chart {chart = 1}. The free coordinates keep their
/// projective names (chart T uses X, Y, Z); a missing value stays symbolic.
struct ChartPoint {
  Var chart = Var::T;
  std::array<std::optional<NFElem>, 3> coords{};

  static ChartPoint symbolic(Var chart = Var::T);
  static ChartPoint at(Var chart, const NFElem& a, const NFElem& b, const NFElem& c);
  /// Same as `at` for the point p, which must have p[chart] != 0.
  static ChartPoint from_projective(Var chart, const ProjPoint& p);

  /// The three coordinates other than the chart, in X, Y, Z, T order.
  std::array<Var, 3> free_vars() const;
  /// Values for all four coordinates, the chart one being 1.
  std::array<MPoly, 4> homogeneous() const;
};

struct TangentForm {
  /// d C / d v at P for the three free coordinates.
  std::array<MPoly, 3> affine;
  /// Full projective gradient at P (chart coordinate included).
  std::array<MPoly, 4> projective;

  bool is_zero() const;
};

TangentForm tangent_form(std::size_t i, const ChartPoint& p);

/// Sum of p_k * dC/dx_k at P; equals 3 * C_i(P) by Euler's relation.
MPoly euler_contraction(std::size_t i, const ChartPoint& p);

/// The printed affine tangent rows of C0, C1, C2 (chart T, entries in X, Y, Z).
std::array<MPoly, 3> printed_tangent_row(std::size_t i);

/// Componentwise comparison of the computed symbolic row with the printed one.
CheckReport printed_tangent_check(std::size_t i);

/// Generic independence of the tangent rows of C_i and C_j over Q(r)(X, Y, Z, m).
CheckReport pairwise_independence(std::size_t i, std::size_t j);

/// The obstruction w - (r+1)^2 (3r-2) left by the lambda = a x + b z + c ansatz.
NFElem lambda_obstruction();
CheckReport lambda_replay();

/// Rank of the stacked rows of C1, C2, C3 at [0:0:0:1].
CheckReport reference_point_rank();

/// Exact rank of the stacked rows of the cubics in `cubics` at P.
std::size_t stacked_rank(const std::vector<std::size_t>& cubics, const ChartPoint& p,
                         const std::optional<NFElem>& m_value);

/// 64-bit LCG; every call advances the state and returns it.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish nonzero integer in [-20, 20], resampling zeros.
  long coordinate();

 private:
  std::uint64_t state_;
};

struct SurveyResult {
  std::size_t requested = 0;
  std::size_t skipped = 0;
  /// rank -> count over the points that were not skipped.
  std::map<std::size_t, std::size_t> histogram;
  std::vector<std::array<long, 3>> points;
  CheckReport report;
};

/// Rank of the rows of C0, C1, C2 at n sampled chart-T points. Throws
/// std::invalid_argument for n == 0.
SurveyResult rank_survey(std::size_t n, std::uint64_t seed, const NFElem& m_value);

}  // namespace cgv
