#include "cgv/tangent.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgv/matrix.hpp"
#include "cgv/number_field.hpp"
#include "cgv/parser.hpp"

namespace cgv {
namespace {

void check_cubic(std::size_t i) {
  if (i > 3) throw std::invalid_argument("cubic index out of range: " + std::to_string(i));
}

Substitution point_substitution(const ChartPoint& p) {
  const auto h = p.homogeneous();
  Substitution s;
  for (std::size_t k = 0; k < 4; ++k) s.set(kCoordinates[k], h[k]);
  return s;
}

RingMatrix stacked_rows(const std::vector<std::size_t>& cubics, const ChartPoint& p) {
  RingMatrix out(cubics.size(), 3);
  for (std::size_t row = 0; row < cubics.size(); ++row) {
    const auto form = tangent_form(cubics[row], p);
    for (std::size_t col = 0; col < 3; ++col) out.set(row, col, form.affine[col]);
  }
  return out;
}

std::optional<PaperClaim> pair_claim(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return PaperClaim{"independent", "$T_P(C_0)$ intersects $T_P(C_1)$ in a line"};
  if (i == 0 && j == 2) return PaperClaim{"independent", "Similarly $T_P(C_0)$ intersects $T_P(C_2)$ in a line"};
  if (i == 1 && j == 2) return PaperClaim{"independent", "$T_P(C_1)$ intersects $T_P(C_2)$ in a line"};
  return std::nullopt;
}

}  // namespace

ChartPoint ChartPoint::symbolic(Var chart) {
  ChartPoint p;
  p.chart = chart;
  (void)p.free_vars();
  return p;
}

ChartPoint ChartPoint::at(Var chart, const NFElem& a, const NFElem& b, const NFElem& c) {
  ChartPoint p = symbolic(chart);
  p.coords = {a, b, c};
  return p;
}

ChartPoint ChartPoint::from_projective(Var chart, const ProjPoint& p) {
  const NFElem w = p[index_of(chart)];
  if (w.is_zero()) throw std::invalid_argument("point lies outside the chart");
  ChartPoint out = symbolic(chart);
  const auto vars = out.free_vars();
  for (std::size_t k = 0; k < 3; ++k) out.coords[k] = p[index_of(vars[k])] / w;
  return out;
}

std::array<Var, 3> ChartPoint::free_vars() const {
  if (index_of(chart) > 3) throw std::invalid_argument("chart must be a projective coordinate");
  std::array<Var, 3> out{};
  std::size_t n = 0;
  for (Var v : kCoordinates) {
    if (v != chart) out[n++] = v;
  }
  return out;
}

std::array<MPoly, 4> ChartPoint::homogeneous() const {
  std::array<MPoly, 4> out;
  out[index_of(chart)] = MPoly(1);
  const auto vars = free_vars();
  for (std::size_t k = 0; k < 3; ++k) {
    out[index_of(vars[k])] = coords[k] ? MPoly(*coords[k]) : MPoly::variable(vars[k]);
  }
  return out;
}

bool TangentForm::is_zero() const {
  return std::all_of(projective.begin(), projective.end(), [](const MPoly& e) { return e.is_zero(); });
}

TangentForm tangent_form(std::size_t i, const ChartPoint& p) {
  check_cubic(i);
  const MPoly& c = cubic_family().cubics[i];
  const auto s = point_substitution(p);
  TangentForm out;
  for (std::size_t k = 0; k < 4; ++k) out.projective[k] = mp_substitute(mp_partial(c, kCoordinates[k]), s);
  const auto vars = p.free_vars();
  for (std::size_t k = 0; k < 3; ++k) out.affine[k] = out.projective[index_of(vars[k])];
  return out;
}

MPoly euler_contraction(std::size_t i, const ChartPoint& p) {
  const auto form = tangent_form(i, p);
  const auto h = p.homogeneous();
  MPoly out;
  for (std::size_t k = 0; k < 4; ++k) out += h[k] * form.projective[k];
  return out;
}

std::array<MPoly, 3> printed_tangent_row(std::size_t i) {
  static const char* const kRows[3][3] = {
      {"(3*r-2)+(r+1)*(3*r-2)*Y+(-6*r^2+2*r+2)*Z",
       "(3*r-2)*m+(3*r-2)*(r+1)*X+(-2*r^2-5*r+5)*Z",
       "(3*r-2)*r^2+(-6*r^2+2*r+2)*X+(-2*r^2-5*r+5)*Y"},
      {"(3*r-2)*(Y+m*Z+r^2)*(1+X)+(r+1)*(3*r-2)*Y*Z+(-6*r^2+2*r+2)*Y+(-2*r^2-5*r+5)*Z",
       "(3*r-2)*X^2+(3*r-2)*(r+1)*X*Z+(-6*r^2+2*r+2)*X",
       "(3*r-2)*m*X^2+(r+1)*(3*r-2)*X*Y+(-2*r^2-5*r+5)*X"},
      {"(3*r-2)*r^2*Y^2+(-6*r^2+2*r+2)*Y*Z+(-2*r^2-5*r+5)*Y",
       "(3*r-2)*(Z+m+r^2*X)*(1+Y)+(3*r-2)*(r+1)*Z+(-6*r^2+2*r+2)*Z*X+(-2*r^2-5*r+5)*X",
       "(3*r-2)*Y^2+(3*r-2)*(r+1)*Y+(-6*r^2+2*r+2)*X*Y"},
  };
  if (i > 2) throw std::invalid_argument("no printed tangent row for C" + std::to_string(i));
  return {parse_poly(kRows[i][0]), parse_poly(kRows[i][1]), parse_poly(kRows[i][2])};
}

CheckReport printed_tangent_check(std::size_t i) {
  static const char* const kCitations[3] = {"which is  for $T_P(C_0)$",
                                            "Similarly we have the equation for $T_P(C_1)$ given by",
                                            "The equation of $T_P(C_2)$ is given by"};
  const auto printed = printed_tangent_row(i);
  const auto computed = tangent_form(i, ChartPoint::symbolic(Var::T));
  std::string matching;
  std::vector<std::string> notes{"chart T = 1, affine coordinates written X, Y, Z"};
  const char* const names[3] = {"X", "Y", "Z"};
  for (std::size_t k = 0; k < 3; ++k) {
    if (printed[k] == computed.affine[k]) {
      matching += matching.empty() ? names[k] : std::string(", ") + names[k];
      continue;
    }
    notes.push_back(std::string("d/d") + names[k] + ": computed " + computed.affine[k].to_string() + "; printed " +
                    printed[k].to_string() + "; printed - computed = " +
                    (printed[k] - computed.affine[k]).to_string());
  }
  const std::string value = matching.empty() ? "no component" : matching;
  return make_report("tangent.printed.C" + std::to_string(i), "matches printed in " + value,
                     PaperClaim{"matches printed in X, Y, Z", kCitations[i]}, std::move(notes));
}

CheckReport pairwise_independence(std::size_t i, std::size_t j) {
  check_cubic(i);
  check_cubic(j);
  const auto rows = stacked_rows({i, j}, ChartPoint::symbolic(Var::T));
  std::size_t nonzero = 0;
  std::optional<MPoly> witness;
  const char* const names[3] = {"X", "Y", "Z"};
  std::string witness_cols;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      const MPoly minor = matrix_det(rows.submatrix({0, 1}, {a, b}));
      if (minor.is_zero()) continue;
      ++nonzero;
      if (!witness) {
        witness = minor;
        witness_cols = std::string(names[a]) + names[b];
      }
    }
  }
  std::vector<std::string> notes{std::to_string(nonzero) + " of 3 2x2 minors are nonzero polynomials"};
  if (witness) notes.push_back("minor on columns " + witness_cols + ": " + witness->to_string());
  const auto [lo, hi] = std::minmax(i, j);
  return make_report("tangent.pair." + std::to_string(lo) + "-" + std::to_string(hi),
                     nonzero > 0 ? "independent" : "dependent", pair_claim(i, j), std::move(notes));
}

NFElem lambda_obstruction() {
  const NFElem r = NFElem::generator();
  const NFElem w = parse_poly("-2*r^2-5*r+5").constant_term();
  const NFElem r1 = r + NFElem(1);
  return w - r1 * r1 * bracket_factor();
}

CheckReport lambda_replay() {
  const NFElem r = NFElem::generator();
  const NFElem e = lambda_obstruction();
  const NFElem printed = parse_poly("3*r^2+4*r-4").constant_term();
  std::vector<std::string> notes{
      "a = 1/(r+1) = " + (r + NFElem(1)).inverse().to_string(),
      "w - (r+1)^2 (3r-2) = " + e.to_string(),
      std::string("equals -(3r^2+4r-4): ") + (e == -printed ? "yes" : "no"),
  };
  bool invertible = true;
  try {
    notes.push_back("inverse of 3r^2+4r-4 = " + nf_invert(printed).to_string());
  } catch (const std::domain_error&) {
    invertible = false;
  }
  const bool nonzero = invertible && !e.is_zero() && e == -printed;
  return make_report("tangent.lambda-replay", nonzero ? "nonzero" : "zero",
                     PaperClaim{"nonzero", "$3r^2+4r-4=0$$ which is not true"}, std::move(notes));
}

CheckReport reference_point_rank() {
  const ChartPoint p = ChartPoint::from_projective(Var::T, reference_point(3));
  const auto rows = stacked_rows({1, 2, 3}, p);
  std::vector<std::string> notes;
  for (std::size_t i = 1; i <= 3; ++i) {
    const auto form = tangent_form(i, p);
    std::string row = "gradient of C" + std::to_string(i) + " at [0:0:0:1]: (";
    for (std::size_t k = 0; k < 4; ++k) row += (k ? ", " : "") + form.projective[k].to_string();
    notes.push_back(row + ")");
  }
  notes.push_back("each C_i = h_i * Q_i has h_i and Q_i both vanishing at [0:0:0:1]");
  return make_report("tangent.reference-point", std::to_string(matrix_rank(rows).rank),
                     PaperClaim{"3", "the equations are $X=Y=Z=0$"}, std::move(notes));
}

std::size_t stacked_rank(const std::vector<std::size_t>& cubics, const ChartPoint& p,
                         const std::optional<NFElem>& m_value) {
  return matrix_rank(stacked_rows(cubics, p), m_value).rank;
}

std::uint64_t Lcg::next() {
  state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
  return state_;
}

long Lcg::coordinate() {
  for (;;) {
    const long v = static_cast<long>(next() % 41) - 20;
    if (v != 0) return v;
  }
}

SurveyResult rank_survey(std::size_t n, std::uint64_t seed, const NFElem& m_value) {
  if (n == 0) throw std::invalid_argument("survey size must be at least 1");
  SurveyResult out;
  out.requested = n;
  Lcg rng(seed);
  for (std::size_t k = 0; k < n; ++k) {
    const std::array<long, 3> c{rng.coordinate(), rng.coordinate(), rng.coordinate()};
    out.points.push_back(c);
    const ChartPoint p = ChartPoint::at(Var::T, NFElem(c[0]), NFElem(c[1]), NFElem(c[2]));
    const Substitution at_m = Substitution().set(Var::m, MPoly(m_value));
    RingMatrix rows(3, 3);
    bool degenerate = false;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto form = tangent_form(i, p);
      bool zero = true;
      for (std::size_t col = 0; col < 3; ++col) {
        rows.set(i, col, mp_substitute(form.affine[col], at_m));
        zero = zero && rows(i, col).is_zero();
      }
      degenerate = degenerate || zero;
    }
    if (degenerate) {
      ++out.skipped;
      continue;
    }
    ++out.histogram[matrix_rank(rows).rank];
  }
  std::string histogram;
  for (const auto& [rank, count] : out.histogram) {
    histogram += (histogram.empty() ? "" : ", ") + std::string("rank ") + std::to_string(rank) + ": " +
                 std::to_string(count);
  }
  const bool any = !out.histogram.empty();
  const std::size_t min_rank = any ? out.histogram.begin()->first : 0;
  out.report = make_report(
      "tangent.rank-survey", any ? std::to_string(min_rank) : "no points",
      PaperClaim{"3", "intersects only at one point by dimension counting"},
      {"rows of C0, C1, C2 in the chart T = 1; minimum rank over the surveyed points",
       "m = " + m_value.to_string() + ", seed = " + std::to_string(seed) + ", points = " + std::to_string(n) +
           ", skipped (zero gradient) = " + std::to_string(out.skipped),
       "histogram: " + (any ? histogram : std::string("empty"))},
      any);
  return out;
}

}  // namespace cgv
