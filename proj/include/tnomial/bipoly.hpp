#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "tnomial/exact.hpp"

namespace tnomial {

/// Exponent pair (power of p, power of q).
struct Monomial {
  std::uint32_t p_deg = 0;
  std::uint32_t q_deg = 0;

  std::uint32_t degree() const { return p_deg + q_deg; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of Z[p,q]. Sparse, canonical: no stored coefficient is zero, so
/// equality is equality of the term maps.
class BiPoly {
 public:
  // Descending lexicographic order on (p-degree, q-degree).
  using TermMap = std::map<Monomial, BigInt, std::greater<>>;

  BiPoly() = default;
  BiPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long long c) : BiPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly p() { return monomial({1, 0}); }
  static BiPoly q() { return monomial({0, 1}); }
  static BiPoly monomial(Monomial m, const BigInt& coeff = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(Monomial m) const;

  /// Exact evaluation at an integer point, with 0^0 = 1.
  BigInt eval(const BigInt& p0, const BigInt& q0) const;

  /// True when every monomial has total degree `d` (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous(std::uint32_t d) const;
  /// Exchanges the roles of p and q.
  BiPoly swapped() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text form, e.g. "p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4".
  std::string str() const;

 private:
  void add_term(Monomial m, const BigInt& c);
  TermMap terms_;
};

inline std::string to_string(const BiPoly& v) { return v.str(); }

}  // namespace tnomial
