#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgv/geometry.hpp"
#include "cgv/matrix.hpp"
#include "cgv/report.hpp"

namespace cgv {

/// One of the 16 pieces of C0 ∩ C1 ∩ C2 ∩ C3: for each cubic C_i = h_i * Q_i
/// either the hyperplane h_i or the quadric Q_i is chosen.
struct Stratum {
  std::array<bool, 4> uses_quadric{};

  /// Display order: C0's choice is the most significant bit, quadric = 1.
  static Stratum from_index(std::size_t index);
  std::size_t index() const;

  std::vector<Var> hyperplanes() const;
  std::vector<std::size_t> quadric_indices() const;
  /// e.g. "T,X,Y,Q3".
  std::string label() const;
};

enum class StratumKind { empty, reference_points, non_reference_points, inconclusive };

std::string_view to_string(StratumKind kind);

struct StratumResult {
  StratumKind kind = StratumKind::inconclusive;
  /// Reference points, or verified witnesses for non_reference_points.
  std::vector<ProjPoint> points;
  /// Symbolic identities backing the classification.
  std::vector<std::string> identities;
  /// Kernel of the monomial system (entries may be polynomials in m).
  std::vector<std::vector<MPoly>> kernel;
  /// The classification holds for every value of m, not just generically.
  bool uniform_in_m = false;

  /// "reference points [0:1:0:0], [0:0:1:0]" and similar.
  std::string summary() const;
};

/// Hyperplanes h1, h2, h3 together with quadric Q_j. Throws
/// std::invalid_argument unless the four pieces come from four distinct cubics.
StratumResult stratum_triple_hyperplane(Var h1, Var h2, Var h3, std::size_t quadric,
                                        const std::optional<NFElem>& m_value = std::nullopt);

/// Hyperplanes h1, h2 with quadrics Q_i, Q_j; same shape rule. Each restriction
/// must be a nonzero multiple of one monomial, otherwise the result is inconclusive.
StratumResult stratum_double_hyperplane(Var h1, Var h2, std::size_t qi, std::size_t qj,
                                        const std::optional<NFElem>& m_value = std::nullopt);

/// The three quadrics not paired with h, restricted to h = 0, in the product
/// monomial basis (v1 v2, v2 v3, v3 v1) of the remaining coordinates.
struct HyperplaneSystem {
  Var hyperplane;
  std::array<std::size_t, 3> quadric_indices;
  std::array<Var, 3> coords;
  std::array<MPoly, 3> basis;
  /// Rows are the restricted brackets where the outer terms vanish on h = 0,
  /// otherwise the restricted quadrics; raw row i = row_scale[i] * row i.
  RingMatrix matrix;
  std::array<NFElem, 3> row_scale;
};

HyperplaneSystem single_hyperplane_system(Var h);

/// The printed 3x3 matrix for h = T.
RingMatrix printed_hyperplane_matrix();

struct DetAnalysis {
  MPoly det;
  /// Coefficients of m^0, m^1, ... of the determinant.
  std::vector<NFElem> m_coefficients;
  NFElem m_free() const { return m_coefficients.empty() ? NFElem() : m_coefficients[0]; }
  NFElem m_linear() const { return m_coefficients.size() > 1 ? m_coefficients[1] : NFElem(); }
  /// Compares the whole determinant with the printed "-20r^2+4r+10".
  CheckReport report;
};

DetAnalysis single_hyperplane_det_analysis(Var h);

/// Solves the monomial system on h = 0 and lifts kernel vectors to points.
/// With `m_value` empty the analysis is over Q(r)(m).
StratumResult monomial_kernel_lift(Var h, const std::optional<NFElem>& m_value);

/// Dispatches on the shape of the stratum.
StratumResult classify_stratum(const Stratum& s, const std::optional<NFElem>& m_value);

struct BaseLocusAnalysis {
  std::array<StratumResult, 16> strata;
  /// Union of all points found.
  std::vector<ProjPoint> points;
  /// confirmed: exactly the reference points; refuted: a verified extra point;
  /// indeterminate: some stratum is inconclusive.
  Agreement verdict = Agreement::indeterminate;
};

BaseLocusAnalysis analyze_base_locus(const std::optional<NFElem>& m_value);

struct CirculantEntries {
  NFElem a, b, c, d;
  /// a = (r+1)(3r-2), b = 3r-2, c = r^2(3r-2), d = -2r^2-5r+5.
  static CirculantEntries printed();
};

/// Rows (a b c d), (d a b c), (c d a b), (b c d a).
RingMatrix circulant_matrix(const CirculantEntries& e);
NFElem circulant_det_cofactor(const CirculantEntries& e);
/// (a+b+c+d)(a-b+c-d)((a-c)^2+(b-d)^2).
NFElem circulant_det_formula(const CirculantEntries& e);

/// Monomials X^2, Y^2, Z^2, T^2, XY, XZ, XT, YZ, YT, ZT.
std::array<MPoly, 10> quadric_monomial_basis();
/// 4 x 10 coefficient matrix of Q0..Q3 over Q(r)[m].
RingMatrix quadric_coefficient_matrix();

struct IndependenceResult {
  NFElem det_cofactor;
  NFElem det_formula;
  RankResult rank;
  std::vector<CheckReport> reports;
};

IndependenceResult quadric_independence(const std::optional<NFElem>& m_value);

}  // namespace cgv
