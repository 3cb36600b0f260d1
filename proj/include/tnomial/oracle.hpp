#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tnomial/exact.hpp"
#include "tnomial/tseq.hpp"

// Brute-force enumeration oracles. Nothing here calls the coefficient
// routes: agreement with them is evidence, not a tautology.
namespace tnomial::oracle {

/// Upper bound on the number of objects a single enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// Reads TNOMIAL_MAX_BUDGET, falling back to kDefaultBudget when unset.
/// ParameterError on a malformed value.
std::uint64_t budget_from_env();

/// n boxes, the i-th holding lambda_i = q^(i-1) p^(n-i) distinguishable balls.
class BoxWeights {
 public:
  BoxWeights(std::int64_t p, std::int64_t q, long n);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  long n() const { return static_cast<long>(weights_.size()); }
  const std::vector<BigInt>& weights() const { return weights_; }

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::vector<BigInt> weights_;
};

/// Number of ways to pick k balls from the boxes, one box per ball, with box
/// repetition allowed or not. Requires n <= 8, k <= 6, p, q <= 3.
BigInt count_selections(const BoxWeights& w, long k, bool repetition, std::uint64_t budget = kDefaultBudget);

/// Labeled bipartite multigraphs on n vertices with a distinguished k-set as
/// one side and edge multiplicities in {0..alpha-1}. Enumerates every
/// multigraph on all vertex pairs and keeps those with no edge inside a side.
/// Requires n <= 5, alpha <= 3.
BigInt count_bipartite_multigraphs(long alpha, long n, long k, std::uint64_t budget = kDefaultBudget);

enum class AcyclicRoute { brute_force, recurrence };

/// Labeled digraphs on n nodes with arc multiplicities in {0..p-1} and no
/// directed cycle. Brute force needs n <= 4; the inclusion-exclusion
/// recurrence a_n = sum_{k>=1} (-1)^(k+1) binom(n,k) p^(k(n-k)) a_(n-k)
/// handles n <= 12.
BigInt count_acyclic_multidigraphs(long p, long n, AcyclicRoute route = AcyclicRoute::recurrence,
                                   std::uint64_t budget = kDefaultBudget);

/// Lower-triangular matrix of exact rationals.
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t order);

  std::size_t order() const { return rows_.size(); }
  /// Zero above the diagonal.
  Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rational v);

  static TriMatrix identity(std::size_t order);
  friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// Exact inverse by forward substitution. SingularMatrix on a zero diagonal.
TriMatrix invert_triangular(const TriMatrix& m);

/// prod_{s=k..n} s_T / prod_{s=1..m} s_T with m = n-k+1, over `terms`
/// indexed from 0 (terms[s] = s_T). The number of V_{1,m} bricks a tiling of
/// V_{k,n} would need.
BigInt volume_ratio(std::span<const BigInt> terms, long k, long n);
BigInt volume_ratio(const SeqParams& params, long k, long n);

}  // namespace tnomial::oracle
