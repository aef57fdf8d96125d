#include "cgv/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cgv {
namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames{"X", "Y", "Z", "T", "m", "A", "B"};

Exponents exponents_add(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kNumVars; ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

std::string monomial_text(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[index_of(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(NFElem constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, std::move(constant));
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[index_of(v)] = 1;
  return monomial(e, NFElem(1));
}

MPoly MPoly::monomial(const Exponents& exponents, NFElem coefficient) {
  MPoly out;
  out.add_term(exponents, coefficient);
  return out;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && cgv::total_degree(terms_.begin()->first) == 0);
}

NFElem MPoly::constant_term() const { return coefficient(Exponents{}); }

NFElem MPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? NFElem() : it->second;
}

int MPoly::total_degree() const {
  // The grlex order puts a highest-degree term first.
  return terms_.empty() ? -1 : cgv::total_degree(terms_.begin()->first);
}

int MPoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[index_of(v)]));
  return d;
}

bool MPoly::is_homogeneous() const {
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return cgv::total_degree(t.first) == d; });
}

bool MPoly::is_homogeneous_in(std::span<const Var> vars) const {
  std::optional<int> degree;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (Var v : vars) d += e[index_of(v)];
    if (degree && *degree != d) return false;
    degree = d;
  }
  return true;
}

int MPoly::total_degree_in(std::span<const Var> vars) const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (Var v : vars) d += e[index_of(v)];
    best = std::max(best, d);
  }
  return best;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  const int deg = degree_in(v);
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(deg + 1, 0)));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const auto k = rest[index_of(v)];
    rest[index_of(v)] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly base = *this;
  MPoly acc(1);
  while (exponent != 0) {
    if ((exponent & 1U) != 0) acc *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return acc;
}

void MPoly::add_term(const Exponents& exponents, const NFElem& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(exponents_add(ea, eb), ca * cb);
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly MPoly::operator-() const {
  MPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  if (is_constant()) return constant_term().to_string();
  std::string out;
  for (const auto& [e, c] : terms_) {
    const std::string mon = monomial_text(e);
    if (c.is_rational()) {
      const BigRational& q = c.coeff(0);
      const bool negative = q.sign() < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const BigRational mag = q.abs();
      if (mon.empty()) {
        out += mag.to_string();
      } else if (mag == BigRational(1)) {
        out += mon;
      } else {
        out += mag.to_string() + "*" + mon;
      }
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (!mon.empty()) out += "*" + mon;
    }
  }
  return out;
}

MPoly mp_substitute(const MPoly& f, const Substitution& assignment) {
  // Powers of each image are cached since cubics reuse them heavily.
  std::array<std::vector<MPoly>, kNumVars> powers;
  auto power_of = [&](std::size_t var, std::uint16_t k) -> const MPoly& {
    auto& cache = powers[var];
    if (cache.empty()) {
      const MPoly* image = assignment.find(static_cast<Var>(var));
      cache.emplace_back(1);
      cache.push_back(image ? *image : MPoly::variable(static_cast<Var>(var)));
    }
    while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };
  MPoly out;
  for (const auto& [e, c] : f.terms()) {
    MPoly term(c);
    for (std::size_t i = 0; i < kNumVars && !term.is_zero(); ++i) {
      if (e[i] != 0) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

MPoly mp_partial(const MPoly& f, Var v) {
  MPoly out;
  const auto idx = index_of(v);
  for (const auto& [e, c] : f.terms()) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] = static_cast<std::uint16_t>(d[idx] - 1);
    out += MPoly::monomial(d, c * NFElem(static_cast<long>(e[idx])));
  }
  return out;
}

NFElem mp_evaluate(const MPoly& f, const Substitution& assignment) {
  const MPoly value = mp_substitute(f, assignment);
  if (!value.is_constant()) {
    throw std::invalid_argument("evaluation left symbolic variables: " + value.to_string());
  }
  return value.constant_term();
}

MPoly scale(const MPoly& f, const NFElem& c) { return f * MPoly(c.inverse()); }

UPoly<NFElem> to_upoly(const MPoly& f, Var v) {
  std::vector<NFElem> c(static_cast<std::size_t>(std::max(f.degree_in(v) + 1, 0)));
  for (const auto& [e, coeff] : f.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i != index_of(v) && e[i] != 0) {
        throw std::invalid_argument("polynomial is not univariate in " + std::string(var_name(v)));
      }
    }
    c[e[index_of(v)]] = coeff;
  }
  return UPoly<NFElem>(std::move(c));
}

MPoly from_upoly(const UPoly<NFElem>& p, Var v) {
  MPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    Exponents e{};
    e[index_of(v)] = static_cast<std::uint16_t>(k);
    out += MPoly::monomial(e, p[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace cgv
