#include "cgv/genus.hpp"

#include <algorithm>
#include <map>

#include "cgv/number_field.hpp"

namespace cgv {
namespace {

const MPoly kX = MPoly::variable(Var::X);
const MPoly kY = MPoly::variable(Var::Y);

UPoly<NFElem> dehomogenize(const std::vector<NFElem>& a) {
  // Coefficient of x^k is a_(d-k).
  std::vector<NFElem> c(a.rbegin(), a.rend());
  return UPoly<NFElem>(std::move(c));
}

std::string form_text(const BinaryForm& bf) { return bf.to_poly().to_string(); }

NFElem require_exact(const MPoly& f, const char* what) {
  if (!f.is_constant()) throw std::invalid_argument(std::string(what) + " is not an exact constant");
  return f.constant_term();
}

}  // namespace

long ci_genus(long d1, long d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("complete intersection degrees must be >= 1");
  return d1 * d2 * (d1 + d2 - 4) / 2 + 1;
}

long rh_relation(long p_cover, long p_quotient) {
  const long r = 2 * p_cover - 2 - 2 * (2 * p_quotient - 2);
  if (r < 0) {
    throw InfeasibleError("nonnegativity", "ramification degree " + std::to_string(r) + " is negative");
  }
  if (r % 2 != 0) throw InfeasibleError("parity", "ramification degree " + std::to_string(r) + " is odd");
  return r;
}

FeasibilityResult quotient_feasibility(const AccountingScenario& s) {
  FeasibilityResult out;
  out.budget = 2 * s.p_a + 2 - s.ram_deg;
  if (s.ram_deg < 0) {
    out.obstruction = "nonnegativity: ramification degree is negative";
    return out;
  }
  if (s.ram_deg % 2 != 0) {
    out.obstruction = "parity: ramification degree is odd";
    return out;
  }
  if (s.fibers < 0) throw std::invalid_argument("fibre count must be >= 0");
  if (out.budget % 8 != 0) {
    out.obstruction = out.budget % 2 == 0 && (out.budget / 2) % 4 != 0
                          ? "divisibility: 4 s_Q = " + std::to_string(out.budget / 2) + " is not divisible by 4"
                          : "integrality: 8 s_Q = " + std::to_string(out.budget) + " has no integer solution";
    return out;
  }
  const long s_q = out.budget / 8;
  if (s_q < 0) {
    out.obstruction = "nonnegativity: s_Q = " + std::to_string(s_q) + " is negative";
    return out;
  }
  if (s_q < s.fibers) {
    out.obstruction = "nonnegativity: each singular fibre needs delta_Q >= 1 but s_Q = " + std::to_string(s_q);
    return out;
  }
  if (s.fibers == 0 && s_q != 0) {
    out.obstruction = "no singular fibres to carry s_Q = " + std::to_string(s_q);
    return out;
  }
  // Round trip through Riemann-Hurwitz.
  if (rh_relation(s.p_a - 4 * s_q, 0) != s.ram_deg) throw std::logic_error("accounting round trip failed");
  out.feasible = true;
  out.s_q = s_q;
  return out;
}

BinaryForm BinaryForm::from_poly(const MPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero binary form");
  const int d = f.total_degree_in(std::span<const Var>(kCoordinates.data(), 2));
  BinaryForm out;
  out.degree = d;
  out.a.assign(static_cast<std::size_t>(d) + 1, MPoly());
  for (const auto& [e, c] : f.terms()) {
    if (e[index_of(Var::Z)] != 0 || e[index_of(Var::T)] != 0) {
      throw std::invalid_argument("binary form involves Z or T");
    }
    const int ex = e[index_of(Var::X)];
    const int ey = e[index_of(Var::Y)];
    if (ex + ey != d) throw std::invalid_argument("binary form is not homogeneous in X, Y");
    Exponents rest = e;
    rest[index_of(Var::X)] = 0;
    rest[index_of(Var::Y)] = 0;
    out.a[static_cast<std::size_t>(ey)] += MPoly::monomial(rest, c);
  }
  return out;
}

MPoly BinaryForm::to_poly() const {
  MPoly out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += a[i] * kX.pow(static_cast<unsigned>(degree) - static_cast<unsigned>(i)) * kY.pow(static_cast<unsigned>(i));
  }
  return out;
}

BinaryForm BinaryForm::specialized(Var v, const NFElem& value) const {
  BinaryForm out = *this;
  const auto s = Substitution().set(v, MPoly(value));
  for (auto& c : out.a) c = mp_substitute(c, s);
  return out;
}

bool BinaryForm::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const MPoly& c) { return c.is_zero(); });
}

std::vector<NFElem> BinaryForm::constants() const {
  std::vector<NFElem> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(require_exact(c, "binary form coefficient"));
  return out;
}

BinaryForm restrict_to_line(const MPoly& f, const LineSub& line) {
  if (f.is_zero()) throw std::invalid_argument("cannot restrict the zero polynomial");
  if (!f.is_homogeneous_in(kCoordinates)) throw std::invalid_argument("polynomial is not homogeneous");
  const int d = f.total_degree_in(kCoordinates);
  const MPoly g = mp_substitute(f, line.substitution());
  if (g.is_zero()) {
    BinaryForm out;
    out.degree = d;
    out.a.assign(static_cast<std::size_t>(d) + 1, MPoly());
    return out;
  }
  return BinaryForm::from_poly(g);
}

int distinct_points(const BinaryForm& bf) {
  const auto c = bf.constants();
  if (std::all_of(c.begin(), c.end(), [](const NFElem& x) { return x.is_zero(); })) {
    throw std::invalid_argument("zero binary form");
  }
  const auto p = dehomogenize(c);
  const int finite = p.degree() > 0 ? squarefree_part(p).degree() : 0;
  return finite + (c[0].is_zero() ? 1 : 0);
}

std::vector<int> root_pattern(const BinaryForm& bf) {
  const auto c = bf.constants();
  if (std::all_of(c.begin(), c.end(), [](const NFElem& x) { return x.is_zero(); })) {
    throw std::invalid_argument("zero binary form");
  }
  const auto p = dehomogenize(c);
  std::vector<int> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (int k = 0; k < factor.degree(); ++k) out.push_back(mult);
  }
  if (const int at_infinity = bf.degree - p.degree(); at_infinity > 0) out.push_back(at_infinity);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool quintuple_root_condition(const BinaryForm& bf) {
  if (bf.degree != 5) throw std::invalid_argument("quintuple-root condition needs a quintic");
  const auto& a = bf.a;
  return a[2] * a[2] * a[3] * a[3] == MPoly(400) * a[0] * a[1] * a[4] * a[5];
}

bool three_two_root_condition(const BinaryForm& bf) {
  if (bf.degree != 5) throw std::invalid_argument("3-2 root condition needs a quintic");
  const auto& a = bf.a;
  return MPoly(3) * a[5] * a[5] + MPoly(2) * a[0] * a[0] == -(a[1] * a[5]);
}

BinaryForm quintuple_family() {
  return BinaryForm::from_poly((kX - MPoly::variable(Var::A) * kY).pow(5));
}

BinaryForm three_two_family() {
  const MPoly alpha = MPoly::variable(Var::A);
  return BinaryForm::from_poly((kX - alpha * kY).pow(3) * (alpha * kX - kY).pow(2));
}

BinaryForm three_two_member(const NFElem& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("the 3-2 family needs alpha != 0");
  return BinaryForm::from_poly((kX - MPoly(alpha) * kY).pow(3) * (kX - MPoly(alpha.inverse()) * kY).pow(2));
}

CheckReport quintuple_root_check() {
  const auto f = quintuple_family();
  const auto& a = f.a;
  const MPoly lhs = a[2] * a[2] * a[3] * a[3];
  const MPoly rhs = MPoly(400) * a[0] * a[1] * a[4] * a[5];
  return make_report("pencil.quintuple-root", lhs == rhs ? "holds identically" : "fails",
                     PaperClaim{"holds identically", "defines a quartic hypersurface in $\\PR^7$"},
                     {"family (X - A*Y)^5 with A the root: " + form_text(f),
                      "a_2^2 a_3^2 = " + lhs.to_string(), "400 a_0 a_1 a_4 a_5 = " + rhs.to_string(),
                      "a_5/a_0 = " + a[5].to_string() + ": the product of the roots is -a_5/a_0"});
}

CheckReport three_two_root_check() {
  const auto f = three_two_family();
  const auto& a = f.a;
  const MPoly printed = MPoly(3) * a[5] * a[5] + MPoly(2) * a[0] * a[0] + a[1] * a[5];
  const MPoly corrected = MPoly(3) * a[5] * a[5] + MPoly(2) * a[0] * a[0] - a[1] * a[5];
  return make_report(
      "pencil.three-two-root", printed.is_zero() ? "vanishes identically" : "does not vanish identically",
      PaperClaim{"vanishes identically", "$$3a_5^2+2a_0^2=-a_1a_5\\;.$$"},
      {"family (X - A*Y)^3 (A*X - Y)^2, roots A (x3) and 1/A (x2): " + form_text(f),
       "3a_5^2 + 2a_0^2 + a_1 a_5 = " + printed.to_string(),
       "3a_5^2 + 2a_0^2 - a_1 a_5 = " + corrected.to_string(),
       "the product of the roots is -a_5/a_0, not a_5/a_0"});
}

PencilRestriction pencil_restriction() {
  const auto& family = cubic_family();
  const MPoly lambda = MPoly::variable(Var::A);
  const MPoly mu = MPoly::variable(Var::B);
  const MPoly z = MPoly::variable(Var::Z);
  const MPoly t = MPoly::variable(Var::T);
  const LineSub r = line_r();
  const auto sub = r.substitution();
  PencilRestriction out;
  out.restriction = mp_substitute(lambda * kX * z * family.cubics[0] + mu * kY * t * family.cubics[1], sub);
  out.restricted_q0 = mp_substitute(family.quadrics[0], sub);
  out.restricted_q1 = mp_substitute(family.quadrics[1], sub);
  out.cubic = lambda * kX * out.restricted_q0 - mu * kY * out.restricted_q1;
  const MPoly product = kX * kY * out.cubic;
  if (product.is_zero()) return out;
  const auto& [e, c] = *product.terms().begin();
  out.unit = out.restriction.coefficient(e) / c;
  out.identity_holds = !out.unit.is_zero() && out.restriction == product * MPoly(out.unit);
  return out;
}

PencilMember pencil_member(const NFElem& lambda, const NFElem& mu, const NFElem& m_value) {
  if (lambda.is_zero() && mu.is_zero()) throw std::invalid_argument("(lambda : mu) must not be (0 : 0)");
  static const PencilRestriction pencil = pencil_restriction();
  const auto s = Substitution()
                     .set(Var::A, MPoly(lambda))
                     .set(Var::B, MPoly(mu))
                     .set(Var::m, MPoly(m_value));
  const MPoly f = mp_substitute(pencil.restriction, s);
  return {lambda, mu, distinct_points(BinaryForm::from_poly(f))};
}

std::vector<CheckReport> witness_pencil_analysis(const NFElem& m_value) {
  const auto p = pencil_restriction();
  std::vector<CheckReport> out;
  out.push_back(make_report("pencil.factorization", p.identity_holds ? "holds" : "fails",
                            PaperClaim{"holds", "XY(\\lambda XQ_0-\\mu YQ_1)=0"},
                            {"lambda = A, mu = B symbolic; line r: Z = -X, T = -Y",
                             "restriction = (" + p.unit.to_string() + ") * X*Y*(A*X*Qbar0 - B*Y*Qbar1)",
                             "Qbar0 = " + p.restricted_q0.to_string(), "Qbar1 = " + p.restricted_q1.to_string()}));

  const LineSub r = line_r();
  std::vector<std::string> points;
  for (const auto& [x, y] : {std::pair{NFElem(1), NFElem(0)}, std::pair{NFElem(0), NFElem(1)}}) {
    const ProjPoint q = r.point(x, y);
    if (!evaluate_at(kX * kY, q).is_zero()) throw std::logic_error("XY does not vanish at its own root");
    points.push_back(point_to_string(q));
  }
  out.push_back(make_report("pencil.xy-points", points[0] + ", " + points[1],
                            PaperClaim{"[1:0:-1:0], [0:1:0:-1]", "we obtain two points $[1:0:-1:0],[0:1:0:-1]$"},
                            {"roots of X*Y on r, lifted with Z = -X, T = -Y"}));

  // The pencil condition 9da - bc as a polynomial in (lambda, mu).
  const BinaryForm cubic = BinaryForm::from_poly(mp_substitute(p.cubic, Substitution().set(Var::m, MPoly(m_value))));
  const MPoly cond = MPoly(9) * cubic.a[3] * cubic.a[0] - cubic.a[1] * cubic.a[2];
  std::string linear = "yes";
  for (const auto& c : cubic.a) {
    if (c.total_degree() > 1) linear = "no";
  }
  out.push_back(make_report("pencil.cubic-condition-degree", std::to_string(cond.total_degree()),
                            PaperClaim{"2", "Since this is a quadratic in $\\lambda,\\mu$"},
                            {"m = " + m_value.to_string(), "9da - bc = " + cond.to_string(),
                             "a, b, c, d linear in (lambda, mu): " + linear}));
  return out;
}

std::optional<PencilMember> z4_witness_search(long bound, const NFElem& m_value) {
  if (bound < 1) throw std::invalid_argument("witness bound must be >= 1");
  for (long l = 1; l <= bound; ++l) {
    for (long u = -bound; u <= bound; ++u) {
      const auto member = pencil_member(NFElem(l), NFElem(u), m_value);
      if (member.points >= 4) return member;
    }
  }
  return std::nullopt;
}

CheckReport z4_witness_report(long bound, const NFElem& m_value) {
  const auto witness = z4_witness_search(bound, m_value);
  std::map<int, int> histogram;
  for (long l = 1; l <= bound; ++l) {
    for (long u = -bound; u <= bound; ++u) ++histogram[pencil_member(NFElem(l), NFElem(u), m_value).points];
  }
  std::string counts;
  for (const auto& [pts, n] : histogram) {
    counts += (counts.empty() ? "" : ", ") + std::to_string(pts) + " points: " + std::to_string(n);
  }
  std::vector<std::string> notes{"m = " + m_value.to_string() + ", bound = " + std::to_string(bound),
                                 "distinct points over the scanned members: " + counts};
  if (witness) {
    notes.insert(notes.begin(), "witness (lambda : mu) = (" + witness->lambda.to_string() + " : " +
                                    witness->mu.to_string() + ") with " + std::to_string(witness->points) +
                                    " distinct points on r");
  }
  return make_report("pencil.z4-witness", witness ? "non-empty" : "not found",
                     PaperClaim{"non-empty", "$Z_4$ is non-empty"}, std::move(notes), witness.has_value());
}

CubicProbe cubic_probe(const BinaryForm& bf) {
  if (bf.degree != 3) throw std::invalid_argument("cubic probe needs a binary cubic");
  const auto c = bf.constants();
  CubicProbe out;
  out.condition = NFElem(9) * c[3] * c[0] - c[1] * c[2];
  out.pattern = root_pattern(bf);
  out.condition_says_one_root = out.condition.is_zero();
  out.has_one_root = out.pattern.size() == 1;
  return out;
}

CheckReport cubic_one_root_probe(const BinaryForm& cubic, const std::string& id) {
  const auto probe = cubic_probe(cubic);
  std::string pattern;
  for (int k : probe.pattern) pattern += (pattern.empty() ? "" : ",") + std::to_string(k);
  std::vector<std::string> notes{"cubic " + form_text(cubic), "9da - bc = " + probe.condition.to_string(),
                                 "root multiplicities (" + pattern + ")"};
  if (cubic.a[0].is_zero()) notes.push_back("a = 0: the root at X:Y = 1:0 is counted at infinity");
  return make_report(id, probe.agree() ? "agree" : "disagree",
                     PaperClaim{"agree", "9d(\\lambda,\\mu)a(\\lambda,\\mu)-b(\\lambda,\\mu)c(\\lambda,\\mu)=0"},
                     std::move(notes));
}

CheckReport cubic_one_root_probe(const NFElem& lambda, const NFElem& mu, const NFElem& m_value) {
  const auto p = pencil_restriction();
  const auto s = Substitution().set(Var::A, MPoly(lambda)).set(Var::B, MPoly(mu)).set(Var::m, MPoly(m_value));
  auto report = cubic_one_root_probe(BinaryForm::from_poly(mp_substitute(p.cubic, s)), "pencil.cubic-probe.member");
  report.notes.insert(report.notes.begin(), "(lambda : mu) = (" + lambda.to_string() + " : " + mu.to_string() +
                                                "), m = " + m_value.to_string());
  return report;
}

std::vector<CheckReport> genus_reports() {
  std::vector<CheckReport> out;
  out.push_back(make_report("genus.complete-intersection", std::to_string(ci_genus(5, 5)),
                            PaperClaim{"76", "5.5(5+5-4)/2+1=76"}, {"d1 d2 (d1 + d2 - 4)/2 + 1 with d1 = d2 = 5"}));
  out.push_back(make_report("genus.rh-relation", std::to_string(rh_relation(3, 1)), std::nullopt,
                            {"double cover of a genus 1 curve by a genus 3 curve: 2*3 - 2 - 2(2*1 - 2)"}));

  const auto r4 = quotient_feasibility({76, 4, 4});
  out.push_back(make_report("genus.ramification.4", r4.feasible ? "feasible" : "infeasible",
                            PaperClaim{"infeasible", "Since $4$ does not divide $75$"},
                            {"model: sum delta_P = 4 s_Q, p_g = p_a - 4 s_Q, rational quotient",
                             "8 s_Q = 2 p_a + 2 - R = " + std::to_string(r4.budget),
                             "obstruction: " + (r4.obstruction.empty() ? std::string("none") : r4.obstruction)}));

  const auto r2 = quotient_feasibility({76, 4, 2});
  const std::string computed =
      r2.feasible ? "feasible (s_Q = " + std::to_string(*r2.s_q) + ")" : "infeasible (" + r2.obstruction + ")";
  out.push_back(make_unresolved_report(
      "genus.ramification.2", computed, PaperClaim{"does not occur", "We have to prove that this case does not occur"},
      {"8 s_Q = 2 p_a + 2 - R = " + std::to_string(r2.budget),
       "the accounting alone does not exclude this branch; the argument is left open"}));

  const long delta_p = r2.s_q ? 4 * *r2.s_q : -1;
  out.push_back(make_report("genus.anchor.delta-sum", std::to_string(delta_p),
                            PaperClaim{"19", "$$19=(\\sum_{P\\in C}\\delta_{P})$$"},
                            {"R = 2 branch: sum delta_P = 4 s_Q", "s_Q = sum delta_Q = " +
                                                                       (r2.s_q ? std::to_string(*r2.s_q) : "none")},
                            r2.s_q.has_value()));
  return out;
}

}  // namespace cgv
