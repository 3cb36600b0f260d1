#pragma once

#include <string>

#include "tnomial/exact.hpp"

namespace tnomial {

/// a + b*t in Z[t]/(t^2 - alpha*t - 1). The roots of t^2 - alpha*t - 1 are
/// the two golden-ratio-like numbers phi+ and phi-, with phi+ * phi- = -1.
class QuadElem {
 public:
  QuadElem(BigInt a, BigInt b, long alpha);

  static QuadElem integer(const BigInt& a, long alpha) { return {a, 0, alpha}; }
  /// phi+ represented as t.
  static QuadElem phi_plus(long alpha) { return {0, 1, alpha}; }
  /// phi- represented as alpha - t.
  static QuadElem phi_minus(long alpha) { return {alpha, -1, alpha}; }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  long alpha() const { return alpha_; }

  /// True when the t-component is zero.
  bool is_integer() const { return b_ == 0; }
  /// Image under t -> alpha - t.
  QuadElem conjugate() const;
  /// x * conjugate(x), always an integer.
  BigInt norm() const;

  QuadElem operator-() const { return {-a_, -b_, alpha_}; }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.alpha_ == y.alpha_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  void require_same_ring(const QuadElem& o) const;

  BigInt a_;
  BigInt b_;
  long alpha_;
};

inline std::string to_string(const QuadElem& v) { return v.str(); }

}  // namespace tnomial
