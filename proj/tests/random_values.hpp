#pragma once

#include <random>

#include "cgv/mpoly.hpp"
#include "cgv/number_field.hpp"

namespace cgv::testing {

inline BigRational random_rational(std::mt19937_64& rng, long bound = 12) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return BigRational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline NFElem random_nf(std::mt19937_64& rng, long bound = 12) {
  return NFElem(random_rational(rng, bound), random_rational(rng, bound), random_rational(rng, bound));
}

inline NFElem random_nonzero_nf(std::mt19937_64& rng) {
  for (;;) {
    auto a = random_nf(rng);
    if (!a.is_zero()) return a;
  }
}

/// Up to `terms` terms of degree at most 3 in X, Y, Z, m.
inline MPoly random_mpoly(std::mt19937_64& rng, int terms = 5) {
  std::uniform_int_distribution<int> exp(0, 2);
  MPoly f;
  for (int k = 0; k < terms; ++k) {
    Exponents e{};
    e[index_of(Var::X)] = static_cast<std::uint8_t>(exp(rng));
    e[index_of(Var::Y)] = static_cast<std::uint8_t>(exp(rng));
    e[index_of(Var::Z)] = static_cast<std::uint8_t>(exp(rng) % 2);
    e[index_of(Var::m)] = static_cast<std::uint8_t>(exp(rng) % 2);
    f += MPoly::monomial(e, random_nf(rng, 5));
  }
  return f;
}

}  // namespace cgv::testing
