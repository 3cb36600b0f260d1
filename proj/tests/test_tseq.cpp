#include <doctest.h>

#include <vector>

#include "tnomial/tseq.hpp"

using namespace tnomial;

TEST_CASE("term routes on known points") {
  const SeqParams p23(2, 3);
  const std::vector<BigInt> want{1, 5, 19, 65, 211};
  for (long n = 1; n <= 5; ++n) {
    CHECK(term_closed(p23, n) == want[n - 1]);
    CHECK(term_sum(p23, n) == want[n - 1]);
    CHECK(term_generating_function(p23, n) == want[n - 1]);
  }
  const std::vector<BigInt> diag{1, 4, 12, 32};
  for (long n = 1; n <= 4; ++n) {
    CHECK(term_closed(SeqParams(2, 2), n) == diag[n - 1]);
  }
  CHECK(term_closed(SeqParams(1, 1), 7) == 7);
  CHECK(term_sum(SeqParams(2, 3), 3) == 19);
  CHECK(term_sum(SeqParams(1, 2), 4) == 15);
  CHECK(term_sum(SeqParams(1, 1), 5) == 5);
  CHECK(term_closed(p23, 0) == 0);
  CHECK(term_closed(SeqParams(2, 3, 3), 3) == 57);
}

TEST_CASE("symbolic terms") {
  CHECK(term_symbolic(1).str() == "1");
  CHECK(term_symbolic(2).str() == "p + q");
  CHECK(term_symbolic(3).str() == "p^2 + p*q + q^2");
  CHECK(term_symbolic(0).is_zero());
}

TEST_CASE("recurrences on known points") {
  CHECK(check_split_recurrence(SeqParams(2, 3), 2, 1));
  CHECK(check_split_recurrence(SeqParams(1, 2), 1, 2));
  CHECK(check_split_recurrence(SeqParams(1, 1), 4, 7));
  CHECK(check_composition_recurrence(SeqParams(2, 3), Composition({1, 1, 1})));
  CHECK(check_composition_recurrence(SeqParams(2, 3), Composition({2, 1})));
  CHECK(check_composition_recurrence(SeqParams(2, 3), Composition({5})));
}

TEST_CASE("compositions") {
  const auto c32 = compositions_of(3, 2);
  REQUIRE(c32.size() == 2);
  CHECK(c32[0] == Composition({1, 2}));
  CHECK(c32[1] == Composition({2, 1}));
  CHECK(compositions_of(4, 1) == std::vector<Composition>{Composition({4})});
  CHECK(compositions_of(6, 3).size() == 10);
  CHECK(compositions_of(2, 3).empty());
  CHECK_THROWS_AS(Composition({1, 0}), ParameterError);
  for (long n = 1; n <= 10; ++n) {
    for (long parts = 1; parts <= n; ++parts) {
      const auto all = compositions_of(n, parts);
      CHECK(static_cast<long>(all.size()) == static_cast<long>(binomial(n - 1, parts - 1)));
      for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].parts() < all[i].parts());
      }
    }
  }
}

TEST_CASE("alpha-Fibonacci numbers") {
  const std::vector<BigInt> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  CHECK(alpha_fibonacci_terms(1, 10) == fib);
  CHECK(alpha_fibonacci(2, 7) == 169);
  CHECK(alpha_fibonacci(1, -1) == 1);
  CHECK(alpha_fibonacci(3, 2) == 3);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SeqParams(1, 2, 0), ParameterError);
  CHECK(SeqParams(-2, 4).str() == "p=-2 q=4");
}

// ---------------------------------------------------------------------------

TEST_CASE("property: closed and summed terms agree on p, q in [-3,5], n <= 30") {
  for (std::int64_t p = -3; p <= 5; ++p) {
    for (std::int64_t q = -3; q <= 5; ++q) {
      const SeqParams params(p, q);
      for (long n = 0; n <= 30; ++n) {
        const BigInt closed = term_closed(params, n);
        CHECK(term_sum(params, n) == closed);
        CHECK(term_symbolic(n).eval(p, q) == closed);
      }
      for (long n = 0; n <= 12; ++n) {
        CHECK(term_generating_function(params, n) == term_closed(params, n));
      }
    }
  }
}

TEST_CASE("property: symbolic terms are homogeneous of degree n-1") {
  for (long n = 1; n <= 30; ++n) {
    CHECK(term_symbolic(n).is_homogeneous(static_cast<std::uint32_t>(n - 1)));
    CHECK(term_symbolic(n).swapped() == term_symbolic(n));
  }
}

TEST_CASE("property: split recurrence for k + m <= 20") {
  for (std::int64_t p = -3; p <= 5; ++p) {
    for (std::int64_t q = -3; q <= 5; ++q) {
      for (long k = 1; k < 20; ++k) {
        for (long m = 1; k + m <= 20; ++m) {
          CHECK(check_split_recurrence(SeqParams(p, q), k, m));
        }
      }
    }
  }
}

TEST_CASE("property: composition recurrence for n <= 10") {
  for (std::int64_t p = 1; p <= 3; ++p) {
    for (std::int64_t q = 1; q <= 3; ++q) {
      for (long n = 1; n <= 10; ++n) {
        for (long parts = 1; parts <= n; ++parts) {
          CompositionStream stream(n, parts);
          while (auto c = stream.next()) {
            CHECK(check_composition_recurrence(SeqParams(p, q), *c));
          }
        }
      }
    }
  }
}

TEST_CASE("property: alpha-Fibonacci split recurrence") {
  for (long alpha = 1; alpha <= 4; ++alpha) {
    for (long k = 1; k <= 12; ++k) {
      for (long m = 0; m <= 12; ++m) {
        CHECK(alpha_fibonacci(alpha, k + m) ==
              alpha_fibonacci(alpha, m - 1) * alpha_fibonacci(alpha, k) +
                  alpha_fibonacci(alpha, k + 1) * alpha_fibonacci(alpha, m));
      }
    }
  }
}
