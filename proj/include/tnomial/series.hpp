#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tnomial/ring.hpp"

namespace tnomial {

/// Power series in x over R, known exactly below `order()`: coefficient k is
/// meaningful for k < order, everything at or above it is truncated away.
template <class R>
class XSeries {
 public:
  /// `coeffs` must be nonempty; it is padded with zeros or truncated to `order`.
  XSeries(std::vector<R> coeffs, std::size_t order) : one_(make_one(coeffs)), order_(order) {
    coeffs.resize(order, zero_like(one_));
    coeffs_ = std::move(coeffs);
  }

  static XSeries constant(const R& c, std::size_t order) { return XSeries({c}, order); }

  /// c0 + c1*x.
  static XSeries linear(const R& c0, const R& c1, std::size_t order) { return XSeries({c0, c1}, order); }

  /// 1/(1 - ratio*x) expanded as sum ratio^j x^j.
  static XSeries geometric(const R& ratio, std::size_t order) {
    std::vector<R> c;
    c.reserve(std::max<std::size_t>(order, 1));
    R power = one_like(ratio);
    c.push_back(power);
    for (std::size_t j = 1; j < order; ++j) {
      power *= ratio;
      c.push_back(power);
    }
    return XSeries(std::move(c), order);
  }

  std::size_t order() const { return order_; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  const R& one() const { return one_; }

  XSeries& operator+=(const XSeries& o) {
    truncate(o.order_);
    for (std::size_t k = 0; k < order_; ++k) {
      coeffs_[k] += o.coeffs_[k];
    }
    return *this;
  }

  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }

  friend XSeries operator*(const XSeries& a, const XSeries& b) {
    const std::size_t order = std::min(a.order_, b.order_);
    std::vector<R> out(std::max<std::size_t>(order, 1), zero_like(a.one_));
    for (std::size_t i = 0; i < order; ++i) {
      if (is_zero(a.coeffs_[i])) {
        continue;
      }
      for (std::size_t j = 0; i + j < order; ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return XSeries(std::move(out), order);
  }

  XSeries& operator*=(const XSeries& o) { return *this = *this * o; }

  /// Equal orders and equal retained coefficients.
  friend bool operator==(const XSeries& a, const XSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static R make_one(const std::vector<R>& coeffs) {
    if (coeffs.empty()) {
      throw ParameterError("XSeries needs at least one coefficient");
    }
    return one_like(coeffs.front());
  }

  void truncate(std::size_t order) {
    if (order < order_) {
      order_ = order;
      coeffs_.resize(order, zero_like(one_));
    }
  }

  R one_;
  std::size_t order_;
  std::vector<R> coeffs_;
};

/// Product of `factors`, truncated at `order`. An empty factor list yields
/// the constant series `one`.
template <class R>
XSeries<R> series_product(std::span<const XSeries<R>> factors, std::size_t order, const R& one) {
  XSeries<R> acc = XSeries<R>::constant(one, order);
  for (const auto& f : factors) {
    acc *= f;
  }
  return acc;
}

template <class R>
XSeries<R> series_product(std::span<const XSeries<R>> factors, std::size_t order) {
  return series_product(factors, order, R(1));
}

}  // namespace tnomial
