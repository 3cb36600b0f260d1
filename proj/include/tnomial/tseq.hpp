#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnomial/bipoly.hpp"
#include "tnomial/exact.hpp"

namespace tnomial {

/// Tileable sequence with generating function scale * x / ((1 - p x)(1 - q x)).
struct SeqParams {
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t scale = 1;

  SeqParams() = default;
  SeqParams(std::int64_t p_, std::int64_t q_, std::int64_t scale_ = 1);

  friend auto operator<=>(const SeqParams&, const SeqParams&) = default;
  std::string str() const;
};

/// Ordered tuple of positive parts.
class Composition {
 public:
  explicit Composition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long total() const { return total_; }
  std::size_t size() const { return parts_.size(); }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<long> parts_;
  long total_ = 0;
};

/// Compositions of n into exactly `parts` positive parts, in lexicographic
/// order. Yields nothing when parts > n or parts == 0.
class CompositionStream {
 public:
  CompositionStream(long n, long parts);
  std::optional<Composition> next();

 private:
  std::vector<long> current_;
  bool done_ = false;
};

std::vector<Composition> compositions_of(long n, long parts);

// Term routes. n = 0 gives 0 everywhere.

/// (q^n - p^n)/(q - p), or n q^(n-1) when p = q; times scale.
BigInt term_closed(const SeqParams& params, long n);
/// sum_{i=1..n} q^(n-i) p^(i-1), times scale.
BigInt term_sum(const SeqParams& params, long n);
/// [x^n] of the generating function, expanded as a truncated series product.
BigInt term_generating_function(const SeqParams& params, long n);
/// The unscaled term as an element of Z[p,q].
BiPoly term_symbolic(long n);

/// Terms 0..n_max by the closed form.
std::vector<BigInt> terms(const SeqParams& params, long n_max);

/// (k+m)_T == p^m k_T + q^k m_T
bool check_split_recurrence(const SeqParams& params, long k, long m);
/// n_T == sum_i p^(b_{i+1}+...+b_s) q^(b_1+...+b_{i-1}) (b_i)_T
bool check_composition_recurrence(const SeqParams& params, const Composition& c);

/// alpha-Fibonacci numbers: 0, 1, alpha, alpha^2 + 1, ... extended to n = -1
/// (value 1) so that the split recurrence covers m = 0.
BigInt alpha_fibonacci(long alpha, long n);
std::vector<BigInt> alpha_fibonacci_terms(long alpha, long n_max);

}  // namespace tnomial
