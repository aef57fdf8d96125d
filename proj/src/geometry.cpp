#include "cgv/geometry.hpp"

#include <stdexcept>

#include "cgv/parser.hpp"

namespace cgv {
namespace {

constexpr std::array<std::string_view, 4> kCoordNames{"X", "Y", "Z", "T"};

// Printed cubics, brackets as read in kBracketReading.
constexpr std::array<std::string_view, 4> kPrintedCubics{
    "T*((3*r-2)*((X+m*Y+r^2*Z)*T+(r+1)*X*Y)+(-6*r^2+2*r+2)*X*Z+(-2*r^2-5*r+5)*Y*Z)",
    "X*((3*r-2)*((Y+m*Z+r^2*T)*X+(r+1)*Y*Z)+(-6*r^2+2*r+2)*Y*T+(-2*r^2-5*r+5)*Z*T)",
    "Y*((3*r-2)*((Z+m*T+r^2*X)*Y+(r+1)*Z*T)+(-6*r^2+2*r+2)*Z*X+(-2*r^2-5*r+5)*T*X)",
    "Z*((3*r-2)*((T+m*X+r^2*Y)*Z+(r+1)*T*X)+(-6*r^2+2*r+2)*T*Y+(-2*r^2-5*r+5)*X*Y)",
};

constexpr std::array<std::string_view, 4> kBrackets{
    "(X+m*Y+r^2*Z)*T+(r+1)*X*Y",
    "(Y+m*Z+r^2*T)*X+(r+1)*Y*Z",
    "(Z+m*T+r^2*X)*Y+(r+1)*Z*T",
    "(T+m*X+r^2*Y)*Z+(r+1)*T*X",
};

constexpr std::array<std::string_view, 4> kOuter{
    "(-6*r^2+2*r+2)*X*Z+(-2*r^2-5*r+5)*Y*Z",
    "(-6*r^2+2*r+2)*Y*T+(-2*r^2-5*r+5)*Z*T",
    "(-6*r^2+2*r+2)*Z*X+(-2*r^2-5*r+5)*T*X",
    "(-6*r^2+2*r+2)*T*Y+(-2*r^2-5*r+5)*X*Y",
};

MPoly coordinate(std::size_t k) { return MPoly::variable(kCoordinates[k]); }

MPoly signed_coordinate(const SignedCoord& c) {
  return c.sign > 0 ? coordinate(c.index) : -coordinate(c.index);
}

}  // namespace

ProjPoint reference_point(std::size_t k) {
  ProjPoint p{};
  p.at(k) = NFElem(1);
  return p;
}

ProjPoint normalized(const ProjPoint& p) {
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    const NFElem inv = c.inverse();
    ProjPoint out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = p[i] * inv;
    return out;
  }
  throw std::invalid_argument("the zero vector is not a projective point");
}

bool same_point(const ProjPoint& a, const ProjPoint& b) { return normalized(a) == normalized(b); }

std::string point_to_string(const ProjPoint& p) {
  const ProjPoint n = normalized(p);
  std::string out = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != 0) out += ":";
    out += n[i].to_string();
  }
  return out + "]";
}

MPoly evaluate_at(const MPoly& f, const ProjPoint& p) {
  Substitution s;
  for (std::size_t k = 0; k < 4; ++k) s.set(kCoordinates[k], MPoly(p[k]));
  return mp_substitute(f, s);
}

CoordMap::CoordMap(std::array<SignedCoord, 4> images) : images_(images) {
  std::array<bool, 4> seen{};
  for (const auto& c : images_) {
    if (c.index >= 4 || seen[c.index] || (c.sign != 1 && c.sign != -1)) {
      throw std::invalid_argument("coordinate map must be a signed permutation");
    }
    seen[c.index] = true;
  }
}

CoordMap CoordMap::identity() { return CoordMap({{{0, 1}, {1, 1}, {2, 1}, {3, 1}}}); }

CoordMap CoordMap::sigma() { return CoordMap({{{3, 1}, {0, 1}, {1, 1}, {2, 1}}}); }

CoordMap CoordMap::compose(const CoordMap& inner) const {
  std::array<SignedCoord, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const SignedCoord& outer_k = images_[k];
    const SignedCoord& via = inner.images_[outer_k.index];
    out[k] = {via.index, outer_k.sign * via.sign};
  }
  return CoordMap(out);
}

CoordMap CoordMap::power(unsigned n) const {
  CoordMap acc = identity();
  for (unsigned i = 0; i < n; ++i) acc = compose(acc);
  return acc;
}

unsigned CoordMap::order() const {
  // A signed permutation of 4 coordinates has order dividing 2 * lcm(1..4) = 24.
  CoordMap acc = *this;
  for (unsigned n = 1; n <= 24; ++n) {
    if (acc == identity()) return n;
    acc = compose(acc);
  }
  throw std::logic_error("signed permutation with order above 24");
}

std::array<MPoly, 4> CoordMap::apply(const std::array<MPoly, 4>& point) const {
  std::array<MPoly, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = images_[k].sign > 0 ? point[images_[k].index] : -point[images_[k].index];
  }
  return out;
}

ProjPoint CoordMap::apply(const ProjPoint& point) const {
  ProjPoint out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = images_[k].sign > 0 ? point[images_[k].index] : -point[images_[k].index];
  }
  return out;
}

std::string CoordMap::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k != 0) out += ", ";
    if (images_[k].sign < 0) out += "-";
    out += kCoordNames[images_[k].index];
  }
  return out + ")";
}

MPoly apply_map(const MPoly& f, const CoordMap& g) {
  Substitution s;
  for (std::size_t k = 0; k < 4; ++k) s.set(kCoordinates[k], signed_coordinate(g.image(k)));
  return mp_substitute(f, s);
}

LineSub::LineSub(std::string name, SignedCoord z_image, SignedCoord t_image)
    : name_(std::move(name)), z_(z_image), t_(t_image) {
  if (z_.index > 1 || t_.index > 1 || z_.index == t_.index) {
    throw std::invalid_argument("line substitution must send Z, T to distinct signed copies of X, Y");
  }
}

Substitution LineSub::substitution() const {
  return Substitution().set(Var::Z, signed_coordinate(z_)).set(Var::T, signed_coordinate(t_));
}

std::array<MPoly, 4> LineSub::parametrization() const {
  return {coordinate(0), coordinate(1), signed_coordinate(z_), signed_coordinate(t_)};
}

ProjPoint LineSub::point(const NFElem& x, const NFElem& y) const {
  const std::array<NFElem, 2> xy{x, y};
  return {x, y, z_.sign > 0 ? xy[z_.index] : -xy[z_.index], t_.sign > 0 ? xy[t_.index] : -xy[t_.index]};
}

LineSub line_r() { return LineSub("r", {0, -1}, {1, -1}); }

LineSub line_r_prime() { return LineSub("r'", {0, 1}, {1, 1}); }

CheckReport fixed_line_check(const CoordMap& g, const LineSub& line) {
  const auto p = line.parametrization();
  const auto q = g.apply(p);
  std::vector<std::string> notes;
  bool fixed = true;
  for (std::size_t i = 0; i < 4 && fixed; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const MPoly minor = q[i] * p[j] - q[j] * p[i];
      if (!minor.is_zero()) {
        fixed = false;
        notes.push_back("minor (" + std::to_string(i) + "," + std::to_string(j) + ") = " + minor.to_string());
        break;
      }
    }
  }
  notes.push_back("image of (X, Y, Z, T) on " + line.name() + ": (" + q[0].to_string() + ", " + q[1].to_string() +
                  ", " + q[2].to_string() + ", " + q[3].to_string() + ")");
  return make_report("fixed-line." + g.to_string() + "." + line.name(),
                     fixed ? "fixed pointwise" : "not fixed pointwise",
                     PaperClaim{"fixed pointwise", "The fixed point set of the involution"}, std::move(notes));
}

NFElem bracket_factor() { return NFElem(-2, 3, 0); }

CubicFamily build_cubics() {
  CubicFamily f;
  const MPoly b(bracket_factor());
  for (std::size_t i = 0; i < 4; ++i) {
    f.printed[i] = kPrintedCubics[i];
    f.cubics[i] = parse_poly(kPrintedCubics[i]);
    f.brackets[i] = parse_poly(kBrackets[i]);
    f.outer[i] = parse_poly(kOuter[i]);
    f.quadrics[i] = b * f.brackets[i] + f.outer[i];
    const MPoly cofactor = MPoly::variable(f.cofactors[i]);
    if (f.cubics[i] != cofactor * f.quadrics[i]) {
      throw std::logic_error("cubic C" + std::to_string(i) + " does not factor as printed");
    }
    if (f.cubics[i].total_degree_in(kCoordinates) != 3 || !f.cubics[i].is_homogeneous_in(kCoordinates) ||
        f.quadrics[i].total_degree_in(kCoordinates) != 2 || !f.quadrics[i].is_homogeneous_in(kCoordinates)) {
      throw std::logic_error("cubic family has a non-homogeneous member");
    }
  }
  return f;
}

const CubicFamily& cubic_family() {
  static const CubicFamily family = build_cubics();
  return family;
}

std::optional<std::size_t> find_in_family(const MPoly& f, const std::array<MPoly, 4>& family) {
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j] == f) return j;
  }
  return std::nullopt;
}

}  // namespace cgv
