#pragma once

#include <cstdint>
#include <random>

#include "tnomial/bipoly.hpp"
#include "tnomial/quad.hpp"

// Small deterministic generators for the property tests.
namespace tnomial::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x7e5eedULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BiPoly random_bipoly(int max_terms = 4, std::uint32_t max_deg = 3, long max_coeff = 5) {
  BiPoly out;
  const int terms = static_cast<int>(uniform(0, max_terms));
  for (int i = 0; i < terms; ++i) {
    const Monomial m{static_cast<std::uint32_t>(uniform(0, max_deg)), static_cast<std::uint32_t>(uniform(0, max_deg))};
    out += BiPoly::monomial(m, uniform(-max_coeff, max_coeff));
  }
  return out;
}

inline QuadElem random_quad(long alpha, long max_coeff = 9) {
  return {uniform(-max_coeff, max_coeff), uniform(-max_coeff, max_coeff), alpha};
}

}  // namespace tnomial::testing
