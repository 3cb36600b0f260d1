#include "tnomial/oracle_checks.hpp"

#include <vector>

#include "tnomial/coeff.hpp"
#include "tnomial/identities.hpp"

namespace tnomial::oracle {

namespace {

std::uint64_t u(long v) { return static_cast<std::uint64_t>(v); }

BigInt rec(const SeqParams& params, long n, long k) { return coeff_recurrence({params, n, k}); }

}  // namespace

IdentityReport check_selections(const SeqParams& params, long n_max, long k_max, std::uint64_t budget) {
  ReportBuilder report(IdentityId::selections, params, n_max, k_max);
  const BigInt pq = BigInt(params.p) * params.q;
  for (long n = 1; n <= n_max; ++n) {
    const BoxWeights w(params.p, params.q, n);
    for (long k = 0; k <= k_max; ++k) {
      report.expect_equal(count_selections(w, k, true, budget), rec(params, n + k - 1, k), n, k, "with repetition");
      const BigInt subset = k <= n ? rec(params, n, k) * ipow(pq, choose2(u(k))) : BigInt(0);
      report.expect_equal(count_selections(w, k, false, budget), subset, n, k, "without repetition");
    }
  }
  return report.finish();
}

IdentityReport check_bipartite(long alpha, long n_max, std::uint64_t budget) {
  const SeqParams diagonal(alpha, alpha);
  ReportBuilder report(IdentityId::bipartite_multigraphs, diagonal, n_max, n_max);
  report.alpha(alpha);
  for (long n = 1; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      const BigInt count = count_bipartite_multigraphs(alpha, n, k, budget);
      report.expect_equal(count, binomial(n, k) * ipow(alpha, u(k * (n - k))), n, k, "closed form");
      report.expect_equal(count, rec(diagonal, n, k), n, k, "T(alpha,alpha) coefficient");
    }
  }
  return report.finish();
}

IdentityReport check_acyclic_routes(long p, long n_max, std::uint64_t budget) {
  ReportBuilder report(IdentityId::acyclic_routes, SeqParams(p, p), n_max, 0);
  for (long n = 0; n <= n_max; ++n) {
    report.expect_equal(count_acyclic_multidigraphs(p, n, AcyclicRoute::brute_force, budget),
                        count_acyclic_multidigraphs(p, n, AcyclicRoute::recurrence, budget), n, 0);
  }
  return report.finish();
}

IdentityReport verify_inverse_relation(long p_val, long n_max) {
  if (p_val < 2) {
    throw ParameterError("inverse relation needs p >= 2");
  }
  if (n_max < 1 || n_max > 8) {
    throw ParameterError("inverse relation needs 1 <= n_max <= 8");
  }
  const SeqParams diagonal(p_val, p_val);
  ReportBuilder report(IdentityId::inverse_relation, diagonal, n_max, n_max);
  std::vector<BigInt> acyclic;
  for (long m = 0; m <= n_max; ++m) {
    acyclic.push_back(count_acyclic_multidigraphs(p_val, m, AcyclicRoute::recurrence));
  }
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      BigInt want = acyclic[n - k] * binomial(n, k) * ipow(p_val, u(k * (n - k)));
      if ((n - k) % 2 != 0) {
        want = -want;
      }
      report.expect_equal(coeff_inverse({diagonal, n, k}), want, n, k);
    }
  }
  return report.finish();
}

IdentityReport check_volume_ratio(const SeqParams& params, long n_max) {
  ReportBuilder report(IdentityId::volume_ratio, params, n_max, n_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long k = 1; k <= n; ++k) {
      report.expect_equal(volume_ratio(params, k, n), rec(params, n, n - k + 1), n, k);
    }
  }
  return report.finish();
}

IdentityReport check_fibonacci_volume_ratio(long alpha, long n_max) {
  ReportBuilder report(IdentityId::volume_ratio, std::nullopt, n_max, n_max);
  report.alpha(alpha);
  const auto fib = alpha_fibonacci_terms(alpha, n_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long k = 1; k <= n; ++k) {
      report.expect_equal(volume_ratio(fib, k, n), fibonomial(alpha, n, n - k + 1), n, k);
    }
  }
  return report.finish();
}

}  // namespace tnomial::oracle
