#include "cgv/divisor.hpp"

#include <stdexcept>
#include <string>

namespace cgv {

DivisorClass DivisorClass::exceptional(std::size_t i) {
  if (i > 3) throw std::invalid_argument("exceptional curve index out of range");
  DivisorClass d;
  d.e[i] = 1;
  return d;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  h += rhs.h;
  for (std::size_t i = 0; i < 4; ++i) e[i] += rhs.e[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  h -= rhs.h;
  for (std::size_t i = 0; i < 4; ++i) e[i] -= rhs.e[i];
  return *this;
}

DivisorClass operator*(long k, DivisorClass d) {
  d.h *= k;
  for (auto& x : d.e) x *= k;
  return d;
}

std::string DivisorClass::to_string() const {
  std::string out = "pi*(" + std::to_string(h) + "H)";
  if (e[0] == e[1] && e[1] == e[2] && e[2] == e[3]) {
    if (e[0] != 0) out += (e[0] < 0 ? " - " : " + ") + std::to_string(std::labs(e[0])) + "*sum(E)";
    return out;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    out += (e[i] < 0 ? " - " : " + ") + std::to_string(std::labs(e[i])) + "*E" + std::to_string(i + 1);
  }
  return out;
}

long IntersectionForm::pair(const DivisorClass& a, const DivisorClass& b) const {
  long out = hyperplane_square * a.h * b.h;
  for (std::size_t i = 0; i < 4; ++i) out -= a.e[i] * b.e[i];
  return out;
}

long pair(const DivisorClass& a, const DivisorClass& b) { return IntersectionForm{}.pair(a, b); }

DivisorClass canonical_class() { return DivisorClass::hyperplane() - DivisorClass::exceptional_sum(); }

long exceptional_multiplicity(long n, const IntersectionForm& form) {
  if (n <= 0) throw std::invalid_argument("multiplicity needs n >= 1");
  const auto e = DivisorClass::exceptional(0);
  const long e_square = form.pair(e, e);
  // 2g - 2 = E^2 + K.E on each E_i.
  const long k_dot_e = 2 * kExceptionalGenus - 2 - e_square;
  // n K.E_i = n_i E_i^2 since pi^*(nH) is orthogonal to E_i.
  const long lhs = n * k_dot_e;
  if (lhs % e_square != 0) throw std::logic_error("non-integral exceptional multiplicity");
  return lhs / e_square;
}

BigRational adjunction_genus(const DivisorClass& d, const IntersectionForm& form) {
  return BigRational(form.pair(d, d) + form.pair(canonical_class(), d), 2) + BigRational(1);
}

std::vector<CheckReport> divisor_reports() {
  struct Anchor {
    long n;
    const char* citation;
  };
  static const Anchor kAnchors[] = {
      {1, "K_V=\\pi^*(H)-\\sum_i E_i"},
      {2, "that is $n_i=-2$"},
      {3, "and we have $n_i=-3$"},
      {5, "5K_V=\\pi^*(\\bcC.\\bcQ)-5\\sum_i E_i"},
  };
  const auto k = canonical_class();
  const auto e = DivisorClass::exceptional(0);
  std::vector<CheckReport> out;
  for (const auto& a : kAnchors) {
    const long ni = exceptional_multiplicity(a.n);
    const DivisorClass assembled = DivisorClass{a.n, {ni, ni, ni, ni}};
    const DivisorClass scaled = a.n * k;
    std::vector<std::string> notes{
        "E_i^2 = " + std::to_string(pair(e, e)) + ", K_V.E_i = " + std::to_string(pair(k, e)) +
            " (adjunction, genus 1)",
        std::to_string(a.n) + "K_V = " + assembled.to_string() + (assembled == scaled ? " (agrees with " : " (differs from ") +
            std::to_string(a.n) + " * K_V)",
        "(" + std::to_string(a.n) + "K_V)^2 = " + std::to_string(pair(assembled, assembled)),
    };
    if (a.n == 1) notes.push_back("the intermediate line \"n_i=1\" has the opposite sign to the displayed class");
    out.push_back(make_report("divisors.multiplicity." + std::to_string(a.n), std::to_string(ni),
                              PaperClaim{std::to_string(-a.n), a.citation}, std::move(notes)));
  }
  return out;
}

}  // namespace cgv
