#include "cgv/baselocus.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgv/parser.hpp"

namespace cgv {
namespace {

std::size_t coordinate_index(Var v) {
  const auto idx = index_of(v);
  if (idx > 3) throw std::invalid_argument("not a projective coordinate: " + std::string(var_name(v)));
  return idx;
}

std::size_t cubic_of_hyperplane(Var h) {
  const auto& family = cubic_family();
  for (std::size_t i = 0; i < 4; ++i) {
    if (family.cofactors[i] == h) return i;
  }
  throw std::invalid_argument("not a cofactor hyperplane: " + std::string(var_name(h)));
}

Substitution zero_out(const std::vector<Var>& vars) {
  Substitution s;
  for (Var v : vars) s.set(v, MPoly());
  return s;
}

std::string restriction_text(std::size_t quadric, const std::vector<Var>& zeros, const MPoly& value) {
  std::string out = "Q" + std::to_string(quadric) + "|{";
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (k != 0) out += ",";
    out += std::string(var_name(zeros[k])) + "=0";
  }
  return out + "} = " + value.to_string();
}

// Coordinate part of an exponent vector.
Exponents coordinate_part(const Exponents& e) {
  Exponents out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = e[i];
  return out;
}

Exponents monomial_exponents(const MPoly& monomial) {
  if (monomial.term_count() != 1) throw std::logic_error("expected a single monomial");
  return monomial.terms().begin()->first;
}

// Coefficient of a coordinate monomial, as a polynomial in the parameters.
MPoly coefficient_of(const MPoly& f, const Exponents& coordinate_monomial) {
  MPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (coordinate_part(e) != coordinate_monomial) continue;
    Exponents rest = e;
    for (std::size_t i = 0; i < 4; ++i) rest[i] = 0;
    out += MPoly::monomial(rest, c);
  }
  return out;
}

void check_shape(const std::vector<Var>& hyperplanes, const std::vector<std::size_t>& quadrics) {
  std::array<bool, 4> used{};
  for (Var h : hyperplanes) {
    const auto i = cubic_of_hyperplane(h);
    if (used[i]) throw std::invalid_argument("illegal stratum: repeated cubic");
    used[i] = true;
  }
  for (auto q : quadrics) {
    if (q > 3 || used[q]) throw std::invalid_argument("illegal stratum: quadric paired with its own hyperplane");
    used[q] = true;
  }
  if (hyperplanes.size() + quadrics.size() != 4) throw std::invalid_argument("illegal stratum size");
}

bool on_quadrics(const ProjPoint& p, const std::vector<std::size_t>& quadrics) {
  const auto& family = cubic_family();
  return std::all_of(quadrics.begin(), quadrics.end(),
                     [&](std::size_t q) { return evaluate_at(family.quadrics[q], p).is_zero(); });
}

bool on_all_cubics(const ProjPoint& p) {
  const auto& family = cubic_family();
  return std::all_of(family.cubics.begin(), family.cubics.end(),
                     [&](const MPoly& c) { return evaluate_at(c, p).is_zero(); });
}

MPoly specialize_m(const MPoly& f, const std::optional<NFElem>& m_value) {
  return m_value ? mp_substitute(f, Substitution().set(Var::m, MPoly(*m_value))) : f;
}

std::string vector_text(const std::vector<MPoly>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::vector<MPoly> cross(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Point on h = 0 whose product monomials (v1v2, v2v3, v3v1) are proportional to k.
// Requires all three entries nonzero.
std::array<MPoly, 4> lift_full(const HyperplaneSystem& sys, const std::vector<MPoly>& k) {
  std::array<MPoly, 4> p;
  p[coordinate_index(sys.coords[0])] = k[0] * k[2];
  p[coordinate_index(sys.coords[1])] = k[0] * k[1];
  p[coordinate_index(sys.coords[2])] = k[1] * k[2];
  return p;
}

// Generic point of the line where only basis monomial i is nonzero.
ProjPoint lift_single(const HyperplaneSystem& sys, std::size_t i) {
  ProjPoint p{};
  p[coordinate_index(sys.coords[i])] = NFElem(1);
  p[coordinate_index(sys.coords[(i + 1) % 3])] = NFElem(1);
  return p;
}

std::size_t nonzero_count(const std::vector<MPoly>& k) {
  return static_cast<std::size_t>(std::count_if(k.begin(), k.end(), [](const MPoly& e) { return !e.is_zero(); }));
}

std::vector<ProjPoint> hyperplane_reference_points(const HyperplaneSystem& sys, const std::optional<NFElem>& m_value) {
  std::vector<ProjPoint> out;
  const auto& family = cubic_family();
  for (Var v : sys.coords) {
    const ProjPoint p = reference_point(coordinate_index(v));
    const bool on = std::all_of(sys.quadric_indices.begin(), sys.quadric_indices.end(), [&](std::size_t q) {
      return specialize_m(evaluate_at(family.quadrics[q], p), m_value).is_zero();
    });
    if (on) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const ProjPoint& a, const ProjPoint& b) {
    return point_to_string(a) > point_to_string(b);
  });
  return out;
}

void verify_witness(const ProjPoint& p, const HyperplaneSystem& sys, const std::optional<NFElem>& m_value) {
  const auto& family = cubic_family();
  for (auto q : sys.quadric_indices) {
    if (!specialize_m(evaluate_at(family.quadrics[q], p), m_value).is_zero()) {
      throw std::logic_error("lifted point fails Q" + std::to_string(q));
    }
  }
  for (const auto& c : family.cubics) {
    if (!specialize_m(evaluate_at(c, p), m_value).is_zero()) throw std::logic_error("lifted point fails a cubic");
  }
}

StratumResult lift_kernel_vectors(const HyperplaneSystem& sys, const std::vector<std::vector<NFElem>>& basis,
                                   const std::optional<NFElem>& m_value) {
  StratumResult out;
  for (const auto& v : basis) out.kernel.push_back(std::vector<MPoly>(v.begin(), v.end()));
  if (basis.empty()) {
    out.kind = StratumKind::reference_points;
    out.points = hyperplane_reference_points(sys, m_value);
    out.identities.push_back("monomial system is nonsingular: kernel {0}");
    return out;
  }
  // Candidate directions: the basis and small integer combinations of it.
  std::vector<std::vector<NFElem>> candidates = basis;
  if (basis.size() >= 2) {
    for (long a = 1; a <= 4; ++a) {
      for (long b = 1; b <= 4; ++b) {
        std::vector<NFElem> v(3);
        for (std::size_t i = 0; i < 3; ++i) v[i] = NFElem(a) * basis[0][i] + NFElem(b) * basis[1][i];
        candidates.push_back(std::move(v));
      }
    }
  }
  for (const auto& v : candidates) {
    const std::vector<MPoly> k(v.begin(), v.end());
    const auto nz = nonzero_count(k);
    ProjPoint p{};
    if (nz == 3) {
      const auto lifted = lift_full(sys, k);
      for (std::size_t i = 0; i < 4; ++i) p[i] = lifted[i].constant_term();
    } else if (nz == 1) {
      const auto i = static_cast<std::size_t>(std::find_if(k.begin(), k.end(), [](const MPoly& e) {
                                               return !e.is_zero();
                                             }) - k.begin());
      p = lift_single(sys, i);
    } else {
      continue;
    }
    verify_witness(p, sys, m_value);
    out.kind = StratumKind::non_reference_points;
    out.points.push_back(p);
    out.identities.push_back("kernel vector " + vector_text(k) + " lifts to " + point_to_string(p) +
                             "; all four cubics vanish there");
    return out;
  }
  if (basis.size() == 1) {
    out.kind = StratumKind::reference_points;
    out.points = hyperplane_reference_points(sys, m_value);
    out.identities.push_back("kernel spanned by " + vector_text(out.kernel[0]) +
                             "; its zero entry forces a second coordinate to vanish, leaving only reference points");
    return out;
  }
  out.kind = StratumKind::inconclusive;
  out.identities.push_back("no liftable kernel direction found among the candidates");
  return out;
}

StratumResult lift_symbolic(const HyperplaneSystem& sys) {
  StratumResult out;
  const MPoly det = matrix_det(sys.matrix);
  if (!det.is_zero()) {
    out.kind = StratumKind::reference_points;
    out.points = hyperplane_reference_points(sys, std::nullopt);
    out.identities.push_back("det = " + det.to_string() + " is a nonzero polynomial in m: kernel {0} for generic m");
    out.uniform_in_m = det.is_constant();
    return out;
  }
  out.identities.push_back("det vanishes identically in Q(r)[m]");
  const auto rank = matrix_rank(sys.matrix);
  if (rank.rank != 2) {
    out.kind = StratumKind::inconclusive;
    out.identities.push_back("rank over Q(r)(m) is " + std::to_string(rank.rank));
    return out;
  }
  // Rank 2 for every m iff the 2x2 minors have no common root.
  std::optional<UPoly<NFElem>> minor_gcd;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t d = c + 1; d < 3; ++d) {
          const auto minor = to_upoly(matrix_det(sys.matrix.submatrix({a, b}, {c, d})), Var::m);
          if (minor.is_zero()) continue;
          minor_gcd = minor_gcd ? gcd(*minor_gcd, minor) : minor.monic();
        }
      }
    }
  }
  const bool rank_uniform = minor_gcd && minor_gcd->degree() == 0;
  out.identities.push_back("gcd of the 2x2 minors in m: " + from_upoly(*minor_gcd, Var::m).to_string());

  std::vector<MPoly> k;
  for (std::size_t a = 0; a < 3 && k.empty(); ++a) {
    for (std::size_t b = a + 1; b < 3 && k.empty(); ++b) {
      auto c = cross(sys.matrix.row(a), sys.matrix.row(b));
      if (nonzero_count(c) != 0) k = std::move(c);
    }
  }
  // Divide out the content so the direction is defined at every m.
  std::optional<UPoly<NFElem>> content;
  for (const auto& e : k) {
    if (e.is_zero()) continue;
    const auto u = to_upoly(e, Var::m);
    content = content ? gcd(*content, u) : u.monic();
  }
  for (auto& e : k) {
    if (!e.is_zero()) e = from_upoly(divmod(to_upoly(e, Var::m), *content).quotient, Var::m);
  }
  out.kernel.push_back(k);
  out.identities.push_back("primitive kernel direction over Q(r)[m]: " + vector_text(k));
  const bool direction_uniform =
      std::all_of(k.begin(), k.end(), [](const MPoly& e) { return e.is_zero() || e.is_constant(); });
  out.uniform_in_m = rank_uniform && direction_uniform;

  const auto nz = nonzero_count(k);
  if (nz == 2) {
    out.kind = StratumKind::reference_points;
    out.points = hyperplane_reference_points(sys, std::nullopt);
    out.identities.push_back("the zero entry forces a second coordinate to vanish: only reference points");
  } else if (nz == 1) {
    const auto i = static_cast<std::size_t>(
        std::find_if(k.begin(), k.end(), [](const MPoly& e) { return !e.is_zero(); }) - k.begin());
    const ProjPoint p = lift_single(sys, i);
    verify_witness(p, sys, std::nullopt);
    out.kind = StratumKind::non_reference_points;
    out.points.push_back(p);
  } else {
    const auto lifted = lift_full(sys, k);
    const auto& family = cubic_family();
    for (const auto& c : family.cubics) {
      Substitution s;
      for (std::size_t i = 0; i < 4; ++i) s.set(kCoordinates[i], lifted[i]);
      if (!mp_substitute(c, s).is_zero()) throw std::logic_error("symbolic lift fails a cubic");
    }
    out.kind = StratumKind::non_reference_points;
    out.identities.push_back("generic common zero (" + lifted[0].to_string() + " : " + lifted[1].to_string() +
                             " : " + lifted[2].to_string() + " : " + lifted[3].to_string() + ")");
  }
  if (out.uniform_in_m) {
    out.identities.push_back("rank and kernel zero pattern are the same for every m");
  } else {
    out.identities.push_back("classification holds for generic m only");
  }
  return out;
}

}  // namespace

Stratum Stratum::from_index(std::size_t index) {
  if (index > 15) throw std::invalid_argument("stratum index out of range");
  Stratum s;
  for (std::size_t i = 0; i < 4; ++i) s.uses_quadric[i] = ((index >> (3 - i)) & 1U) != 0;
  return s;
}

std::size_t Stratum::index() const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < 4; ++i) out = (out << 1U) | (uses_quadric[i] ? 1U : 0U);
  return out;
}

std::vector<Var> Stratum::hyperplanes() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!uses_quadric[i]) out.push_back(cubic_family().cofactors[i]);
  }
  return out;
}

std::vector<std::size_t> Stratum::quadric_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (uses_quadric[i]) out.push_back(i);
  }
  return out;
}

std::string Stratum::label() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != 0) out += ",";
    out += uses_quadric[i] ? "Q" + std::to_string(i) : std::string(var_name(cubic_family().cofactors[i]));
  }
  return out;
}

std::string_view to_string(StratumKind kind) {
  switch (kind) {
    case StratumKind::empty:
      return "empty";
    case StratumKind::reference_points:
      return "reference points";
    case StratumKind::non_reference_points:
      return "non-reference points";
    case StratumKind::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string StratumResult::summary() const {
  std::string out(to_string(kind));
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += point_to_string(points[i]);
  }
  return out;
}

StratumResult stratum_triple_hyperplane(Var h1, Var h2, Var h3, std::size_t quadric,
                                        const std::optional<NFElem>& m_value) {
  const std::vector<Var> zeros{h1, h2, h3};
  check_shape(zeros, {quadric});
  std::size_t remaining = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::find(zeros.begin(), zeros.end(), kCoordinates[k]) == zeros.end()) remaining = k;
  }
  const MPoly restricted = specialize_m(mp_substitute(cubic_family().quadrics[quadric], zero_out(zeros)), m_value);
  StratumResult out;
  out.identities.push_back(restriction_text(quadric, zeros, restricted));
  out.uniform_in_m = true;
  if (restricted.is_zero()) {
    out.kind = StratumKind::reference_points;
    out.points.push_back(reference_point(remaining));
    return out;
  }
  // What is left is c * v^2 with c depending at most on m.
  const Exponents sq = [&] {
    Exponents e{};
    e[remaining] = 2;
    return e;
  }();
  const MPoly c = coefficient_of(restricted, sq);
  if (c.is_constant()) {
    out.kind = StratumKind::empty;
  } else {
    out.kind = StratumKind::inconclusive;
    out.uniform_in_m = false;
  }
  return out;
}

StratumResult stratum_double_hyperplane(Var h1, Var h2, std::size_t qi, std::size_t qj,
                                        const std::optional<NFElem>& m_value) {
  const std::vector<Var> zeros{h1, h2};
  check_shape(zeros, {qi, qj});
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::find(zeros.begin(), zeros.end(), kCoordinates[k]) == zeros.end()) rest.push_back(k);
  }
  const auto& family = cubic_family();
  StratumResult out;
  out.uniform_in_m = true;
  for (auto q : {qi, qj}) {
    const MPoly restricted = specialize_m(mp_substitute(family.quadrics[q], zero_out(zeros)), m_value);
    out.identities.push_back(restriction_text(q, zeros, restricted));
    // Must be c * (single coordinate monomial) with c free of coordinates.
    std::optional<Exponents> mono;
    bool single = !restricted.is_zero();
    for (const auto& [e, c] : restricted.terms()) {
      const auto part = coordinate_part(e);
      if (mono && *mono != part) single = false;
      mono = part;
    }
    if (!single) {
      out.kind = StratumKind::inconclusive;
      out.uniform_in_m = false;
      out.identities.push_back("restriction of Q" + std::to_string(q) + " is not a multiple of a single monomial");
      return out;
    }
    const MPoly c = coefficient_of(restricted, *mono);
    if (!c.is_constant()) {
      out.uniform_in_m = false;
      out.identities.push_back("coefficient " + c.to_string() + " is a unit only where it is nonzero");
    }
  }
  // A nonzero multiple of a monomial in v_a, v_b vanishes only where v_a or v_b does.
  out.kind = StratumKind::reference_points;
  for (auto k : rest) {
    const ProjPoint p = reference_point(k);
    const std::array<std::size_t, 2> pair{qi, qj};
    const bool on = std::all_of(pair.begin(), pair.end(), [&](std::size_t q) {
      return specialize_m(evaluate_at(family.quadrics[q], p), m_value).is_zero();
    });
    if (on) out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end(), [](const ProjPoint& a, const ProjPoint& b) {
    return point_to_string(a) > point_to_string(b);
  });
  if (out.points.empty()) out.kind = StratumKind::empty;
  return out;
}

HyperplaneSystem single_hyperplane_system(Var h) {
  const auto& family = cubic_family();
  const auto i = cubic_of_hyperplane(h);
  const auto hidx = coordinate_index(h);
  HyperplaneSystem sys{h, {}, {}, {}, RingMatrix(3, 3), {}};
  for (std::size_t k = 0; k < 3; ++k) {
    sys.quadric_indices[k] = (i + 1 + k) % 4;
    sys.coords[k] = kCoordinates[(hidx + 1 + k) % 4];
  }
  for (std::size_t k = 0; k < 3; ++k) {
    sys.basis[k] = MPoly::variable(sys.coords[k]) * MPoly::variable(sys.coords[(k + 1) % 3]);
  }
  const auto on_h = Substitution().set(h, MPoly());
  for (std::size_t row = 0; row < 3; ++row) {
    const auto q = sys.quadric_indices[row];
    MPoly restricted;
    if (mp_substitute(family.outer[q], on_h).is_zero()) {
      restricted = mp_substitute(family.brackets[q], on_h);
      sys.row_scale[row] = bracket_factor();
    } else {
      restricted = mp_substitute(family.quadrics[q], on_h);
      sys.row_scale[row] = NFElem(1);
    }
    MPoly accounted;
    for (std::size_t col = 0; col < 3; ++col) {
      const MPoly c = coefficient_of(restricted, monomial_exponents(sys.basis[col]));
      sys.matrix.set(row, col, c);
      accounted += c * sys.basis[col];
    }
    if (accounted != restricted) {
      throw std::logic_error("restricted quadric has monomials outside the product basis");
    }
  }
  return sys;
}

RingMatrix printed_hyperplane_matrix() {
  const char* const kEntries[3][3] = {
      {"1", "r+1", "m"},
      {"r^2*(3*r-2)", "3*r-2", "-6*r^2+2*r+2"},
      {"-2*r^2-5*r+5", "r^2*(3*r-2)", "(3*r-2)*m"},
  };
  RingMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out.set(i, j, parse_poly(kEntries[i][j]));
  }
  return out;
}

DetAnalysis single_hyperplane_det_analysis(Var h) {
  const auto sys = single_hyperplane_system(h);
  DetAnalysis out;
  out.det = matrix_det(sys.matrix);
  for (const auto& c : out.det.coefficients_in(Var::m)) {
    if (!c.is_constant()) throw std::logic_error("determinant involves variables other than m");
    out.m_coefficients.push_back(c.constant_term());
  }
  NFElem scale(1);
  for (const auto& s : sys.row_scale) scale *= s;
  std::vector<std::string> notes{
      "m-coefficient (reduced): " + out.m_linear().to_string(),
      "m-free part (reduced): " + out.m_free().to_string(),
      "determinant of the unscaled restricted quadrics = (" + scale.to_string() + ") * det",
      "verified from the printed matrix, not from the intermediate expansion lines",
  };
  if (h == Var::T) {
    notes.push_back(std::string("computed matrix ") + (sys.matrix == printed_hyperplane_matrix() ? "equals" : "differs from") +
                    " the printed matrix entry-for-entry");
  }
  out.report = make_report("base-locus." + std::string(var_name(h)) + ".det", out.det.to_string(),
                           PaperClaim{parse_poly("-20*r^2+4*r+10").to_string(),
                                      "Since the determinant is $-20r^2+4r+10$"},
                           std::move(notes));
  return out;
}

StratumResult monomial_kernel_lift(Var h, const std::optional<NFElem>& m_value) {
  const auto sys = single_hyperplane_system(h);
  if (!m_value) return lift_symbolic(sys);
  const RingMatrix a = sys.matrix.specialize(Var::m, *m_value);
  auto out = lift_kernel_vectors(sys, kernel_basis(a), m_value);
  out.identities.insert(out.identities.begin(), "m = " + m_value->to_string() + ", rank " +
                                                   std::to_string(matrix_rank(a).rank));
  return out;
}

StratumResult classify_stratum(const Stratum& s, const std::optional<NFElem>& m_value) {
  const auto hs = s.hyperplanes();
  const auto qs = s.quadric_indices();
  switch (hs.size()) {
    case 4: {
      StratumResult out;
      out.kind = StratumKind::empty;
      out.uniform_in_m = true;
      out.identities.push_back("X = Y = Z = T = 0 has only the trivial solution");
      return out;
    }
    case 3:
      return stratum_triple_hyperplane(hs[0], hs[1], hs[2], qs[0], m_value);
    case 2:
      return stratum_double_hyperplane(hs[0], hs[1], qs[0], qs[1], m_value);
    case 1:
      return monomial_kernel_lift(hs[0], m_value);
    default: {
      StratumResult out;
      out.kind = StratumKind::inconclusive;
      for (std::size_t k = 0; k < 4; ++k) {
        const ProjPoint p = reference_point(k);
        if (on_quadrics(p, qs)) out.points.push_back(p);
      }
      out.identities.push_back("contains " + std::to_string(out.points.size()) +
                               " reference points; linear independence of Q0..Q3 does not determine the "
                               "remaining common zeros");
      return out;
    }
  }
}

BaseLocusAnalysis analyze_base_locus(const std::optional<NFElem>& m_value) {
  BaseLocusAnalysis out;
  bool inconclusive = false;
  bool extra = false;
  for (std::size_t idx = 0; idx < 16; ++idx) {
    out.strata[idx] = classify_stratum(Stratum::from_index(idx), m_value);
    const auto& res = out.strata[idx];
    inconclusive = inconclusive || res.kind == StratumKind::inconclusive;
    extra = extra || res.kind == StratumKind::non_reference_points;
    if (res.kind == StratumKind::inconclusive) continue;
    for (const auto& p : res.points) {
      const bool seen = std::any_of(out.points.begin(), out.points.end(), [&](const ProjPoint& q) {
        return same_point(p, q);
      });
      if (!seen) out.points.push_back(p);
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const ProjPoint& a, const ProjPoint& b) {
    return point_to_string(a) > point_to_string(b);
  });
  if (extra) {
    out.verdict = Agreement::refuted;
  } else if (inconclusive) {
    out.verdict = Agreement::indeterminate;
  } else {
    bool exactly_reference = out.points.size() == 4;
    for (std::size_t k = 0; k < 4 && exactly_reference; ++k) {
      exactly_reference = std::any_of(out.points.begin(), out.points.end(),
                                      [&](const ProjPoint& p) { return same_point(p, reference_point(k)); });
    }
    out.verdict = exactly_reference ? Agreement::confirmed : Agreement::refuted;
  }
  for (const auto& p : out.points) {
    if (!on_all_cubics(p)) throw std::logic_error("base-locus point " + point_to_string(p) + " misses a cubic");
  }
  return out;
}

CirculantEntries CirculantEntries::printed() {
  const NFElem r = NFElem::generator();
  const NFElem b = bracket_factor();
  return {(r + NFElem(1)) * b, b, r * r * b, parse_poly("-2*r^2-5*r+5").constant_term()};
}

RingMatrix circulant_matrix(const CirculantEntries& e) {
  const std::array<NFElem, 4> first{e.a, e.b, e.c, e.d};
  RingMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.set(i, j, MPoly(first[(j + 4 - i) % 4]));
  }
  return out;
}

NFElem circulant_det_cofactor(const CirculantEntries& e) { return matrix_det(circulant_matrix(e)).constant_term(); }

NFElem circulant_det_formula(const CirculantEntries& e) {
  const NFElem ac = e.a - e.c;
  const NFElem bd = e.b - e.d;
  return (e.a + e.b + e.c + e.d) * (e.a - e.b + e.c - e.d) * (ac * ac + bd * bd);
}

std::array<MPoly, 10> quadric_monomial_basis() {
  const MPoly x = MPoly::variable(Var::X), y = MPoly::variable(Var::Y);
  const MPoly z = MPoly::variable(Var::Z), t = MPoly::variable(Var::T);
  return {x * x, y * y, z * z, t * t, x * y, x * z, x * t, y * z, y * t, z * t};
}

RingMatrix quadric_coefficient_matrix() {
  const auto basis = quadric_monomial_basis();
  const auto& family = cubic_family();
  RingMatrix out(4, 10);
  for (std::size_t i = 0; i < 4; ++i) {
    MPoly accounted;
    for (std::size_t j = 0; j < 10; ++j) {
      const MPoly c = coefficient_of(family.quadrics[i], monomial_exponents(basis[j]));
      out.set(i, j, c);
      accounted += c * basis[j];
    }
    if (accounted != family.quadrics[i]) throw std::logic_error("quadric outside the monomial basis");
  }
  return out;
}

IndependenceResult quadric_independence(const std::optional<NFElem>& m_value) {
  IndependenceResult out;
  const auto entries = CirculantEntries::printed();
  out.det_cofactor = circulant_det_cofactor(entries);
  out.det_formula = circulant_det_formula(entries);
  if (out.det_cofactor != out.det_formula) {
    throw std::logic_error("circulant determinant routes disagree");
  }
  out.reports.push_back(make_report(
      "quadric-independence.circulant", out.det_cofactor.is_zero() ? "singular" : "nonsingular",
      PaperClaim{"nonsingular", "it has four distinct eigenvalues"},
      {"cofactor determinant = " + out.det_cofactor.to_string(),
       "eigenvalue product (a+b+c+d)(a-b+c-d)((a-c)^2+(b-d)^2) = " + out.det_formula.to_string(),
       "a = " + entries.a.to_string() + ", b = " + entries.b.to_string() + ", c = " + entries.c.to_string() +
           ", d = " + entries.d.to_string(),
       "the printed circulant is not the coefficient matrix of Q0..Q3; see the rank check"}));

  out.rank = matrix_rank(quadric_coefficient_matrix(), m_value);
  std::string witness = "nonzero minor on columns";
  const auto basis = quadric_monomial_basis();
  for (auto c : out.rank.witness_cols) witness += " " + basis[c].to_string();
  out.reports.push_back(make_report(
      "quadric-independence.rank", std::to_string(out.rank.rank),
      PaperClaim{"4", "they are linearly independent"},
      {std::move(witness), m_value ? "m = " + m_value->to_string() : "rank over Q(r)(m), m symbolic"}));
  return out;
}

}  // namespace cgv
