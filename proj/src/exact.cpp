#include "tnomial/exact.hpp"

#include <utility>

namespace tnomial {

DivisibilityError::DivisibilityError(BigInt dividend, BigInt divisor)
    : std::domain_error("divisibility violation: " + dividend.str() + " is not divisible by " +
                        divisor.str()),
      dividend_(std::move(dividend)),
      divisor_(std::move(divisor)) {}

IdentityViolation::IdentityViolation(std::string identity, long n, long k, std::string lhs,
                                     std::string rhs)
    : std::runtime_error("identity " + identity + " violated at n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + ": " + lhs + " != " + rhs),
      identity_(std::move(identity)),
      n_(n),
      k_(k),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) {
    throw DivisibilityError(a, b);
  }
  BigInt quot;
  BigInt rem;
  boost::multiprecision::divide_qr(a, b, quot, rem);
  if (rem != 0) {
    throw DivisibilityError(a, b);
  }
  return quot;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) {
      result *= b;
    }
    exp >>= 1U;
    if (exp != 0) {
      b *= b;
    }
  }
  return result;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw DivisibilityError(num, den);
  }
  // Boost's normalization rejects negative unbounded denominators, so the
  // sign goes on the numerator first.
  value_ = den < 0 ? Impl(-num, -den) : Impl(num, den);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) {
    throw DivisibilityError(num(), den());
  }
  return num();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) {
    throw DivisibilityError(num(), 0);
  }
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) {
    return num().str();
  }
  return num().str() + "/" + den().str();
}

}  // namespace tnomial
