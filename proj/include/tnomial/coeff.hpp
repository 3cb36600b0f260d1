#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "tnomial/bipoly.hpp"
#include "tnomial/exact.hpp"
#include "tnomial/ring.hpp"
#include "tnomial/tseq.hpp"

namespace tnomial {

struct CoeffQuery {
  SeqParams params;
  long n = 0;
  long k = 0;
};

struct MultinomialQuery {
  SeqParams params;
  long n = 0;
  std::vector<long> parts;
};

/// Rows 0..n_max of the triangle C(n,k) = p^(n-k) C(n-1,k-1) + q^k C(n-1,k)
/// with C(n,0) = C(n,n) = 1, computed in any commutative ring.
template <class R>
std::vector<std::vector<R>> tnomial_triangle(const R& p, const R& q, long n_max) {
  std::vector<std::vector<R>> rows;
  if (n_max < 0) {
    return rows;
  }
  const R one = one_like(p);
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  rows.push_back({one});
  // powers of p and q up to n_max, shared across rows
  std::vector<R> p_pow{one};
  std::vector<R> q_pow{one};
  for (long i = 1; i <= n_max; ++i) {
    p_pow.push_back(p_pow.back() * p);
    q_pow.push_back(q_pow.back() * q);
  }
  for (long n = 1; n <= n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<R> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    row.push_back(one);
    for (long k = 1; k < n; ++k) {
      row.push_back(p_pow[n - k] * prev[k - 1] + q_pow[k] * prev[k]);
    }
    row.push_back(one);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline constexpr long kDefaultTriangleLimit = 512;

/// Memoized numeric triangle for one parameter pair. Rows are built lazily
/// up to `n_max`; safe for concurrent use.
class RecurrenceTriangle {
 public:
  explicit RecurrenceTriangle(SeqParams params, long n_max = kDefaultTriangleLimit);

  const SeqParams& params() const { return params_; }
  long n_max() const { return n_max_; }
  /// C(n,k); zero when k < 0 or k > n. ParameterError when n > n_max.
  BigInt at(long n, long k) const;

 private:
  void extend_to(long n) const;

  SeqParams params_;
  long n_max_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<BigInt>> rows_;
};

// Route preconditions. Zero terms occur for p = -q (even indices) and for
// p = q = 0; p^i = q^i with p != q only when p = -q.

/// True when no term 1_T..max(k, n-k)_T vanishes.
bool factorial_route_defined(const SeqParams& params, long n, long k);
/// True when p = q or p^i != q^i for every i <= k.
bool product_route_defined(const SeqParams& params, long k);
/// True when p != q and the nodes q^s p^(k-s), s = 0..k, are pairwise distinct.
bool partial_fractions_defined(const SeqParams& params, long k);

/// n_T! / (k_T! (n-k)_T!) by exact division. DegenerateParameters when the
/// denominator vanishes (p = -q or p = q = 0 produce zero terms).
BigInt coeff_factorial(const CoeffQuery& query);

/// The Pascal-like recurrence, memoized per (p, q).
BigInt coeff_recurrence(const CoeffQuery& query);

/// The recurrence run in Z[p,q]; homogeneous of degree k(n-k).
BiPoly coeff_symbolic(long n, long k);

/// prod_{i=1..k} (p^(n-i+1) - q^(n-i+1)) / (p^i - q^i) accumulated as a
/// rational, or binom(n,k) p^(k(n-k)) when p = q.
BigInt coeff_product(const CoeffQuery& query);

/// Weighted multiset sum over 1 <= b_1 <= ... <= b_k <= n of
/// lambda_{b_1}...lambda_{b_k}, lambda_i = q^(i-1) p^(n-i). Equals C(n+k-1,k).
BigInt coeff_lambda_multiset(const SeqParams& params, long n, long k);

/// Same over strictly increasing indices. Equals C(n,k) (pq)^binom(k,2).
BigInt coeff_lambda_subset(const SeqParams& params, long n, long k);

/// Partial-fraction form: sum_{i=0..k} (-1)^(k-i) mu_i^n /
/// (prod_{j<i}(mu_i - mu_j) prod_{j>i}(mu_j - mu_i)), mu_s = q^s p^(k-s).
/// Any integer n is accepted; for n >= k it equals C(n,k).
Rational coeff_partial_fractions(const SeqParams& params, long n, long k);

/// The mu_s values of coeff_partial_fractions.
std::vector<BigInt> partial_fraction_nodes(const SeqParams& params, long k);

/// C(n; i_1,...,i_s) = C(n,i_1) C(n-i_1,i_2) ... C(n-i_1-...-i_{s-1}, i_s).
BigInt multinomial(const MultinomialQuery& query);

/// Entry (n,k) of the inverse of the lower-triangular matrix [C(n,k)],
/// via the signed composition sum of multinomials.
BigInt coeff_inverse(const CoeffQuery& query);

}  // namespace tnomial
