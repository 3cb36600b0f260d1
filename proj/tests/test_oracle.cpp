#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "tnomial/oracle.hpp"
#include "tnomial/oracle_checks.hpp"

using namespace tnomial;
using namespace tnomial::oracle;

TEST_CASE("weighted box selections") {
  CHECK(count_selections(BoxWeights(2, 3, 2), 2, true) == 19);
  CHECK(count_selections(BoxWeights(2, 3, 3), 2, false) == 114);
  CHECK(count_selections(BoxWeights(3, 2, 5), 3, true) == 3041143);
  CHECK(count_selections(BoxWeights(3, 2, 5), 3, false) == 592488);
  for (long n = 1; n <= 4; ++n) {
    CHECK(count_selections(BoxWeights(2, 3, n), 0, true) == 1);
    CHECK(count_selections(BoxWeights(2, 3, n), 0, false) == 1);
  }
  CHECK(count_selections(BoxWeights(2, 3, 2), 3, false) == 0);
  CHECK_THROWS_AS(BoxWeights(0, 3, 2), ParameterError);
  CHECK_THROWS_AS(count_selections(BoxWeights(2, 3, 9), 1, true), BudgetExceeded);
  CHECK_THROWS_AS(count_selections(BoxWeights(4, 3, 2), 1, true), BudgetExceeded);
  CHECK_THROWS_AS(count_selections(BoxWeights(2, 3, 8), 6, true, 100), BudgetExceeded);
}

TEST_CASE("bipartite multigraphs") {
  CHECK(count_bipartite_multigraphs(2, 3, 1) == 12);
  CHECK(count_bipartite_multigraphs(2, 4, 2) == 96);
  CHECK(count_bipartite_multigraphs(3, 4, 2) == 486);
  for (long n = 1; n <= 5; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(count_bipartite_multigraphs(1, n, k) == binomial(n, k));
    }
  }
  CHECK_THROWS_AS(count_bipartite_multigraphs(2, 6, 3), BudgetExceeded);
  CHECK_THROWS_AS(count_bipartite_multigraphs(3, 5, 2, 1000), BudgetExceeded);
}

TEST_CASE("acyclic multi-digraphs") {
  const std::vector<BigInt> a2{1, 1, 3, 25, 543};
  for (long n = 0; n <= 4; ++n) {
    CHECK(count_acyclic_multidigraphs(2, n, AcyclicRoute::brute_force) == a2[n]);
    CHECK(count_acyclic_multidigraphs(2, n, AcyclicRoute::recurrence) == a2[n]);
  }
  const std::vector<BigInt> a3{1, 1, 5, 109};
  for (long n = 0; n <= 3; ++n) {
    CHECK(count_acyclic_multidigraphs(3, n, AcyclicRoute::brute_force) == a3[n]);
  }
  for (long p = 2; p <= 5; ++p) {
    CHECK(count_acyclic_multidigraphs(p, 1) == 1);
  }
  CHECK_THROWS_AS(count_acyclic_multidigraphs(2, 5, AcyclicRoute::brute_force), BudgetExceeded);
  CHECK_THROWS_AS(count_acyclic_multidigraphs(2, 13), BudgetExceeded);
}

TEST_CASE("triangular inversion") {
  const auto id = TriMatrix::identity(5);
  CHECK(invert_triangular(id) == id);
  TriMatrix pascal(4);
  TriMatrix signed_pascal(4);
  for (std::size_t n = 0; n < 4; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      pascal.set(n, k, binomial(static_cast<long>(n), static_cast<long>(k)));
      const BigInt b = binomial(static_cast<long>(n), static_cast<long>(k));
      signed_pascal.set(n, k, (n - k) % 2 == 0 ? b : BigInt(-b));
    }
  }
  CHECK(invert_triangular(pascal) == signed_pascal);
  CHECK(pascal * signed_pascal == TriMatrix::identity(4));
  TriMatrix singular(2);
  singular.set(0, 0, 1);
  singular.set(1, 0, 1);
  CHECK_THROWS_AS(invert_triangular(singular), SingularMatrix);
  CHECK_THROWS_AS(pascal.set(0, 1, 1), ParameterError);
}

TEST_CASE("volume ratios") {
  CHECK(volume_ratio(SeqParams(1, 2), 3, 4) == 35);
  CHECK(volume_ratio(SeqParams(2, 3), 1, 6) == 1);
  const auto fib = std::vector<BigInt>{0, 1, 1, 2, 3, 5};
  CHECK(volume_ratio(fib, 2, 5) == 5);
  CHECK_THROWS_AS(volume_ratio(SeqParams(1, -1), 1, 3), ParameterError);
}

TEST_CASE("budget from the environment") {
  ::unsetenv("TNOMIAL_MAX_BUDGET");
  CHECK(budget_from_env() == kDefaultBudget);
  ::setenv("TNOMIAL_MAX_BUDGET", "1234", 1);
  CHECK(budget_from_env() == 1234);
  ::setenv("TNOMIAL_MAX_BUDGET", "lots", 1);
  CHECK_THROWS_AS(budget_from_env(), ParameterError);
  ::unsetenv("TNOMIAL_MAX_BUDGET");
}

TEST_CASE("cross-checks against the coefficient routes") {
  for (std::int64_t p = 1; p <= 3; ++p) {
    for (std::int64_t q = 1; q <= 3; ++q) {
      CHECK(check_selections(SeqParams(p, q), 8, 6).holds());
      CHECK(check_volume_ratio(SeqParams(p, q), 8).holds());
    }
  }
  for (long alpha = 1; alpha <= 3; ++alpha) {
    CHECK(check_bipartite(alpha, 5).holds());
  }
  for (long p = 2; p <= 3; ++p) {
    CHECK(check_acyclic_routes(p, 4).holds());
    CHECK(verify_inverse_relation(p, 8).holds());
  }
  CHECK(check_fibonacci_volume_ratio(1, 10).holds());
  CHECK(check_fibonacci_volume_ratio(2, 10).holds());
  CHECK_THROWS_AS(verify_inverse_relation(2, 9), ParameterError);
  CHECK_THROWS_AS(verify_inverse_relation(1, 4), ParameterError);
}
