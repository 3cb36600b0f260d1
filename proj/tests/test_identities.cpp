#include <doctest.h>

#include <vector>

#include "tnomial/coeff.hpp"
#include "tnomial/identities.hpp"

using namespace tnomial;

namespace {

void check_all_hold(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    INFO(identity_name(r.id), " ", r.params ? r.params->str() : "symbolic");
    if (r.counterexample) {
      INFO("n=", r.counterexample->n, " k=", r.counterexample->k, " ", r.counterexample->lhs,
           " != ", r.counterexample->rhs, " ", r.counterexample->detail);
      CHECK(r.holds());
    }
  }
}

}  // namespace

TEST_CASE("generating function expansions") {
  CHECK(expand_A(SeqParams(2, 3), 0).coeffs() == std::vector<BigInt>{1});
  CHECK(expand_A(SeqParams(2, 3), 2).coeffs() == std::vector<BigInt>{1, -5, 6});
  const auto sym = expand_A_symbolic(2);
  CHECK(sym[1] == -(BiPoly::p() + BiPoly::q()));
  CHECK(sym[2] == BiPoly::p() * BiPoly::q());
  CHECK(expand_B(SeqParams(2, 3), 1, 5).coeffs() == std::vector<BigInt>{1, 1, 1, 1, 1});
  CHECK(expand_C(SeqParams(2, 3), 1).coeffs() == std::vector<BigInt>{1, -1});
  CHECK(expand_C(SeqParams(2, 3), 2).coeffs() == std::vector<BigInt>{2, -5, 3});
  CHECK(expand_C_symbolic(2)[1] == -(BiPoly::p() + BiPoly::q()));
  CHECK(ab_product_is_one(SeqParams(2, 3), 4, 6));
  CHECK(ab_product_is_one_symbolic(3, 6));
  CHECK_THROWS_AS(expand_B(SeqParams(2, 3), 0, 4), ParameterError);
}

TEST_CASE("binomial-like theorem") {
  const auto b3 = binomial_like_product(3, BinomialForm::B);
  // (x + y)(2x + 3y)(4x + 9y) = 8x^3 + 38x^2y + 57xy^2 + 27y^3
  CHECK(b3[3].eval(2, 3) == 8);
  CHECK(b3[2].eval(2, 3) == 38);
  CHECK(b3[1].eval(2, 3) == 57);
  CHECK(b3[0].eval(2, 3) == 27);
  const auto b2 = binomial_like_product(2, BinomialForm::B);
  CHECK(b2[2] == BiPoly::p());
  CHECK(b2[1] == BiPoly::p() + BiPoly::q());
  CHECK(b2[0] == BiPoly::q());
  for (long n = 1; n <= 7; ++n) {
    CHECK_FALSE(binomial_like_symbolic(n, BinomialForm::A).has_value());
    CHECK_FALSE(binomial_like_symbolic(n, BinomialForm::B).has_value());
  }
}

TEST_CASE("binomial-like form A specializes to the binomial and q-binomial theorems") {
  for (long n = 1; n <= 7; ++n) {
    const auto a = binomial_like_product(n, BinomialForm::A);
    for (long k = 0; k <= n; ++k) {
      CHECK(a[n - k].eval(1, 1) == binomial(n, k));
      for (long q = -2; q <= 3; ++q) {
        // prod_{i<n} (x + q^i y) = sum_k q^binom(k,2) C(n,k)_q y^k x^(n-k)
        CHECK(a[n - k].eval(1, q) ==
              ipow(q, choose2(static_cast<std::uint64_t>(k))) * coeff_recurrence({SeqParams(1, q), n, k}));
      }
    }
  }
}

TEST_CASE("Vandermonde readings at the documented point") {
  const auto v = vandermonde(SeqParams(2, 3), 2, 2, 2);
  CHECK(v.lhs == 247);
  CHECK(v.proof_rhs == 247);
  CHECK(v.statement_rhs == 235);
  CHECK(v.proof_holds());
  CHECK_FALSE(v.statement_holds());
  const auto w = vandermonde(SeqParams(3, 2), 3, 2, 3);
  CHECK(w.lhs == 2743);
  CHECK(w.proof_rhs == 2743);
  CHECK(w.statement_rhs == 883);
  // at k = 0 the statement reading leaves a stray p^m
  const auto z = vandermonde(SeqParams(2, 3), 0, 1, 0);
  CHECK(z.proof_rhs == 1);
  CHECK(z.statement_rhs == 2);
  for (long n = 0; n <= 3; ++n) {
    for (long m = 0; m <= 3; ++m) {
      CHECK(vandermonde(SeqParams(2, 3), n, m, 0).proof_rhs == 1);
    }
  }
}

TEST_CASE("Vandermonde sweep marks the statement reading as a diagnostic") {
  const auto reports = sweep_vandermonde(SeqParams(2, 3), 5);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].holds());
  CHECK(reports[0].kind == ReportKind::check);
  CHECK_FALSE(reports[1].holds());
  CHECK(reports[1].kind == ReportKind::diagnostic);
  CHECK_FALSE(reports[1].counts_as_failure());
}

TEST_CASE("alternating partial-fraction sum equals one") {
  CHECK(equal1_check(SeqParams(1, 2), 0));
  CHECK(equal1_check(SeqParams(1, 2), 3));
  CHECK(equal1_check(SeqParams(3, -2), 5));
  CHECK_THROWS_AS(equal1_check(SeqParams(2, 2), 2), DegenerateParameters);
}

TEST_CASE("Gaussian coefficients") {
  CHECK(gaussian_explicit(2, 4, 2) == 35);
  CHECK(gaussian_explicit(3, 3, 1) == 13);
  CHECK(gaussian_explicit(5, 7, 0) == 1);
  const std::vector<BigInt> neg_row{1, -5, 15, -5, 1};
  for (long k = 0; k <= 4; ++k) {
    CHECK(gaussian_explicit(-2, 4, k) == neg_row[k]);
  }
  CHECK_THROWS_AS(gaussian_explicit(1, 4, 2), DegenerateParameters);
  CHECK_THROWS_AS(gaussian_explicit(-1, 4, 2), DegenerateParameters);
  for (long q = -3; q <= 4; ++q) {
    for (long n = 0; n <= 6; ++n) {
      CHECK_FALSE(phi_basis_check(q, n).has_value());
    }
  }
}

TEST_CASE("Fibonomial coefficients") {
  const std::vector<BigInt> k2{15, 40, 104, 273, 714, 1870};
  for (long n = 5; n <= 10; ++n) {
    CHECK(fibonomial(1, n, 2) == k2[n - 5]);
  }
  const std::vector<BigInt> row{1, 70, 1015, 2436, 1015, 70, 1};
  for (long k = 0; k <= 6; ++k) {
    CHECK(fibonomial(2, 6, k) == row[k]);
  }
  // C(5,2) = F_1 C(4,1) + F_3 C(4,2) = 3 + 12 at alpha = 1
  CHECK(fibonomial(1, 4, 1) == 3);
  CHECK(fibonomial(1, 4, 2) == 6);
  for (long alpha = 1; alpha <= 3; ++alpha) {
    const auto r = fibonomial_suite(alpha, 10);
    CHECK(r.holds());
    CHECK(r.alpha == alpha);
  }
}

TEST_CASE("orthogonality at a point") {
  for (long n = 1; n <= 6; ++n) {
    for (long s = 1; s <= 6; ++s) {
      CHECK(orthogonality(SeqParams(2, 3), n, s));
      CHECK(orthogonality(SeqParams(-2, 1), n, s));
    }
  }
}

TEST_CASE("sweeps on a few grid points") {
  for (const auto& params : {SeqParams(2, 3), SeqParams(-2, 2), SeqParams(0, 3), SeqParams(1, -1), SeqParams(4, 4)}) {
    check_all_hold({sweep_route_agreement(params, 10), sweep_complementation(params, 10),
                    sweep_iterative_rule(params, 7), sweep_sequence_routes(params, 10),
                    sweep_orthogonality(params, 5, 5), sweep_scale_invariance(params, 6)});
    check_all_hold(sweep_generating_functions(params, 6, 8));
    check_all_hold(sweep_binomial_like(params, 6));
    check_all_hold(sweep_inversion(params, 6));
    if (params.p != params.q) {
      check_all_hold({sweep_equal1(params, 6)});
    }
  }
  check_all_hold(sweep_generating_functions_symbolic(5, 7));
  check_all_hold(sweep_binomial_like_symbolic(5));
  check_all_hold({sweep_pascal(10), sweep_gaussian_explicit(2, 6), sweep_gaussian_inversion(3, 6),
                  sweep_phi_basis(-2, 6)});
}

TEST_CASE("report names round-trip") {
  for (IdentityId id : all_identity_ids()) {
    CHECK(parse_identity_id(identity_name(id)) == id);
  }
  CHECK_FALSE(parse_identity_id("no_such_identity").has_value());
}
