#pragma once

#include <cstdint>

#include "tnomial/oracle.hpp"
#include "tnomial/report.hpp"

// Cross-checks between the enumeration oracles and the coefficient routes.
// Kept apart from oracle.hpp so the enumerators themselves never see
// coefficient code.
namespace tnomial::oracle {

/// count_selections against C(n+k-1,k) (with repetition) and
/// C(n,k) (pq)^binom(k,2) (without), for 1 <= n <= n_max, 0 <= k <= k_max.
IdentityReport check_selections(const SeqParams& params, long n_max, long k_max,
                                std::uint64_t budget = kDefaultBudget);

/// count_bipartite_multigraphs against the T(alpha, alpha) coefficient and
/// against binom(n,k) alpha^(k(n-k)), for 1 <= n <= n_max.
IdentityReport check_bipartite(long alpha, long n_max, std::uint64_t budget = kDefaultBudget);

/// Brute-force and recurrence routes of A_p(n) agree for n <= n_max.
IdentityReport check_acyclic_routes(long p, long n_max, std::uint64_t budget = kDefaultBudget);

/// coeff_inverse(n,k) at p = q = p_val equals
/// (-1)^(n-k) A_p(n-k) binom(n,k) p^(k(n-k)) for k <= n <= n_max <= 8.
IdentityReport verify_inverse_relation(long p_val, long n_max);

/// volume_ratio(k, n) == C(n, n-k+1) for 1 <= k <= n <= n_max. Needs
/// positive terms.
IdentityReport check_volume_ratio(const SeqParams& params, long n_max);

/// The same with alpha-Fibonacci terms against Fibonomial coefficients.
IdentityReport check_fibonacci_volume_ratio(long alpha, long n_max);

}  // namespace tnomial::oracle
