#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgv/geometry.hpp"
#include "cgv/report.hpp"
#include "cgv/upoly.hpp"

namespace cgv {

/// An accounting constraint (sign, parity, integrality) that cannot be met.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string constraint, const std::string& what)
      : std::runtime_error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Arithmetic genus of a complete intersection of surfaces of degrees d1, d2
/// in P^3. Throws std::invalid_argument unless both are >= 1.
long ci_genus(long d1, long d2);

/// Ramification degree of a double cover of a genus p_quotient curve by a
/// genus p_cover curve. Throws InfeasibleError if it is negative or odd.
long rh_relation(long p_cover, long p_quotient);

struct AccountingScenario {
  long p_a = 76;
  /// Singular fibres downstairs; each has two upstairs points with delta_P = 2 delta_Q.
  long fibers = 4;
  long ram_deg = 2;
};

struct FeasibilityResult {
  bool feasible = false;
  /// Total of delta_Q over the fibres when the quotient is rational.
  std::optional<long> s_q;
  /// Empty when feasible.
  std::string obstruction;
  /// 2 p_a + 2 - ram_deg, which must equal 8 s_Q.
  long budget = 0;
};

/// Solves 8 s_Q = 2 p_a + 2 - ram_deg for a nonnegative integer s_Q, i.e.
/// p_g(normalization) = p_a - 4 s_Q with a rational quotient.
FeasibilityResult quotient_feasibility(const AccountingScenario& s);

/// Homogeneous binary form sum a_i X^(d-i) Y^i; coefficients may carry parameters.
struct BinaryForm {
  int degree = 0;
  std::vector<MPoly> a;

  /// Reads a form in X, Y. Throws std::invalid_argument if f is not homogeneous
  /// in X, Y or involves Z or T.
  static BinaryForm from_poly(const MPoly& f);
  MPoly to_poly() const;
  BinaryForm specialized(Var v, const NFElem& value) const;
  bool is_zero() const;
  /// Exact coefficients; throws std::invalid_argument if any is symbolic.
  std::vector<NFElem> constants() const;
};

/// f restricted to the line, as a binary form in (X, Y). Throws
/// std::invalid_argument for a non-homogeneous or zero f.
BinaryForm restrict_to_line(const MPoly& f, const LineSub& line);

/// Number of distinct points of P^1 where the form vanishes, over the
/// algebraic closure. Throws std::invalid_argument on the zero form.
int distinct_points(const BinaryForm& bf);

/// Root multiplicities over the algebraic closure, largest first.
std::vector<int> root_pattern(const BinaryForm& bf);

/// a_2^2 a_3^2 == 400 a_0 a_1 a_4 a_5 (degree 5 only).
bool quintuple_root_condition(const BinaryForm& bf);
/// 3 a_5^2 + 2 a_0^2 == -a_1 a_5 (degree 5 only).
bool three_two_root_condition(const BinaryForm& bf);

/// (X - A Y)^5 with the root parameter carried by the variable A.
BinaryForm quintuple_family();
/// (X - A Y)^3 (A X - Y)^2, i.e. A^2 times the family with roots A (x3) and 1/A (x2).
BinaryForm three_two_family();
/// (X - alpha Y)^3 (X - Y/alpha)^2. Throws std::invalid_argument for alpha = 0.
BinaryForm three_two_member(const NFElem& alpha);

CheckReport quintuple_root_check();
CheckReport three_two_root_check();

/// The four quintics lambda XZ C0 + mu YT C1 restricted to r, with lambda = A, mu = B.
struct PencilRestriction {
  MPoly restriction;
  MPoly restricted_q0;
  MPoly restricted_q1;
  /// lambda X Qbar0 - mu Y Qbar1.
  MPoly cubic;
  /// restriction == unit * X Y * cubic.
  NFElem unit;
  bool identity_holds = false;
};

PencilRestriction pencil_restriction();

struct PencilMember {
  NFElem lambda;
  NFElem mu;
  int points = 0;
};

/// Distinct points of the (lambda : mu) member on r, with m fixed.
/// Throws std::invalid_argument if lambda = mu = 0.
PencilMember pencil_member(const NFElem& lambda, const NFElem& mu, const NFElem& m_value);

/// Reports for the factorization identity and the two XY points.
std::vector<CheckReport> witness_pencil_analysis(const NFElem& m_value);

/// First (lambda : mu) in scan order with at least four points on r:
/// lambda = 1..bound, mu = -bound..bound. Throws std::invalid_argument for bound < 1.
std::optional<PencilMember> z4_witness_search(long bound, const NFElem& m_value);
CheckReport z4_witness_report(long bound, const NFElem& m_value);

struct CubicProbe {
  /// 9 d a - b c for a X^3 + b X^2 Y + c X Y^2 + d Y^3.
  NFElem condition;
  std::vector<int> pattern;
  bool condition_says_one_root = false;
  bool has_one_root = false;
  bool agree() const { return condition_says_one_root == has_one_root; }
};

/// Throws std::invalid_argument unless bf is a nonzero cubic with exact coefficients.
CubicProbe cubic_probe(const BinaryForm& bf);

/// Probes the cubic factor of the (lambda : mu) pencil member.
CheckReport cubic_one_root_probe(const NFElem& lambda, const NFElem& mu, const NFElem& m_value);
/// Probes an arbitrary cubic under the given id.
CheckReport cubic_one_root_probe(const BinaryForm& cubic, const std::string& id);

/// Reports for ci_genus, rh_relation and both ramification branches.
std::vector<CheckReport> genus_reports();

}  // namespace cgv
