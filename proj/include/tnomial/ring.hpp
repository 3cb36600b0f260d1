#pragma once

#include <cstdint>

#include "tnomial/bipoly.hpp"
#include "tnomial/exact.hpp"
#include "tnomial/quad.hpp"

namespace tnomial {

// Identity elements "in the same ring as x". Only QuadElem carries a ring
// parameter; the other rings ignore the argument.
template <class R>
R one_like(const R&) {
  return R(1);
}
template <class R>
R zero_like(const R&) {
  return R(0);
}
inline QuadElem one_like(const QuadElem& x) { return QuadElem::integer(1, x.alpha()); }
inline QuadElem zero_like(const QuadElem& x) { return QuadElem::integer(0, x.alpha()); }

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == Rational(0); }
inline bool is_zero(const BiPoly& x) { return x.is_zero(); }
inline bool is_zero(const QuadElem& x) { return x.a() == 0 && x.b() == 0; }

template <class R>
R ring_pow(const R& base, std::uint64_t e) {
  R result = one_like(base);
  R b = base;
  while (e != 0) {
    if (e & 1U) {
      result *= b;
    }
    e >>= 1U;
    if (e != 0) {
      b *= b;
    }
  }
  return result;
}

}  // namespace tnomial
