#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tnomial {

using BigInt = boost::multiprecision::cpp_int;

// Error hierarchy. Every in-scope quantity is an exact integer or rational, so
// these are hard failures rather than recoverable conditions.

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisibilityError : public std::domain_error {
 public:
  DivisibilityError(BigInt dividend, BigInt divisor);

  const BigInt& dividend() const noexcept { return dividend_; }
  const BigInt& divisor() const noexcept { return divisor_; }

 private:
  BigInt dividend_;
  BigInt divisor_;
};

class DegenerateParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(std::string identity, long n, long k, std::string lhs,
                    std::string rhs);

  const std::string& identity() const noexcept { return identity_; }
  long n() const noexcept { return n_; }
  long k() const noexcept { return k_; }
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string identity_;
  long n_;
  long k_;
  std::string lhs_;
  std::string rhs_;
};

/// Returns a / b, throwing DivisibilityError unless b divides a.
BigInt exact_div(const BigInt& a, const BigInt& b);

/// base^exp with 0^0 = 1.
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

inline std::uint64_t choose2(std::uint64_t k) { return k == 0 ? 0 : k * (k - 1) / 2; }

inline int sign_pow(std::uint64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : value_(n) {}      // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return den() == 1; }
  /// The integer value; DivisibilityError when the denominator is not 1.
  BigInt to_integer() const;

  Rational operator-() const { return Rational(Impl(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  std::string str() const;

 private:
  using Impl = boost::multiprecision::cpp_rational;
  explicit Rational(Impl v) : value_(std::move(v)) {}
  Impl value_;
};

inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace tnomial
