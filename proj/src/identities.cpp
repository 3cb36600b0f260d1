#include "tnomial/identities.hpp"

#include <functional>
#include <string>
#include <utility>

#include "tnomial/coeff.hpp"
#include "tnomial/oracle.hpp"

namespace tnomial {

namespace {

std::uint64_t u(long v) { return static_cast<std::uint64_t>(v); }

// The data an identity needs from its coefficient ring: the images of p and
// q, and C(n,k) in that ring (zero outside 0 <= k <= n).
template <class R>
struct RingView {
  R p;
  R q;
  std::function<R(long, long)> coeff;
};

RingView<BigInt> numeric_view(const SeqParams& params) {
  return {params.p, params.q, [params](long n, long k) -> BigInt {
            if (k < 0 || k > n || n < 0) {
              return 0;
            }
            return coeff_recurrence({params, n, k});
          }};
}

RingView<BiPoly> symbolic_view() {
  return {BiPoly::p(), BiPoly::q(), [](long n, long k) -> BiPoly {
            if (k < 0 || k > n || n < 0) {
              return BiPoly();
            }
            return coeff_symbolic(n, k);
          }};
}

template <class R>
R signed_value(const R& v, std::uint64_t exponent) {
  return sign_pow(exponent) > 0 ? v : -v;
}

template <class R>
void require_coefficient(const char* identity, const R& got, const R& want, long n, long k) {
  if (!(got == want)) {
    using tnomial::to_string;
    throw IdentityViolation(identity, n, k, to_string(got), to_string(want));
  }
}

template <class R>
XSeries<R> expand_A_impl(const RingView<R>& ring, long n) {
  if (n < 0) {
    throw ParameterError("expand_A needs n >= 0");
  }
  const R one = one_like(ring.p);
  const std::size_t order = u(n) + 1;
  std::vector<XSeries<R>> factors;
  for (long i = 1; i <= n; ++i) {
    factors.push_back(XSeries<R>::linear(one, -(ring_pow(ring.q, u(i - 1)) * ring_pow(ring.p, u(n - i))), order));
  }
  XSeries<R> product = series_product<R>(factors, order, one);
  const R pq = ring.p * ring.q;
  for (long k = 0; k <= n; ++k) {
    const R want = signed_value(ring_pow(pq, choose2(u(k))) * ring.coeff(n, k), u(k));
    require_coefficient("gf_a", product[u(k)], want, n, k);
  }
  return product;
}

template <class R>
XSeries<R> expand_B_impl(const RingView<R>& ring, long n, std::size_t order) {
  if (n < 1) {
    throw ParameterError("expand_B needs n >= 1");
  }
  const R one = one_like(ring.p);
  std::vector<XSeries<R>> factors;
  for (long i = 1; i <= n; ++i) {
    factors.push_back(XSeries<R>::geometric(ring_pow(ring.q, u(i - 1)) * ring_pow(ring.p, u(n - i)), order));
  }
  XSeries<R> product = series_product<R>(factors, order, one);
  for (std::size_t k = 0; k < order; ++k) {
    const long kk = static_cast<long>(k);
    require_coefficient("gf_b", product[k], ring.coeff(n + kk - 1, kk), n, kk);
  }
  return product;
}

template <class R>
XSeries<R> expand_C_impl(const RingView<R>& ring, long n) {
  if (n < 0) {
    throw ParameterError("expand_C needs n >= 0");
  }
  const R one = one_like(ring.p);
  const std::size_t order = u(n) + 1;
  std::vector<XSeries<R>> factors;
  for (long i = 1; i <= n; ++i) {
    factors.push_back(XSeries<R>::linear(ring_pow(ring.p, u(i - 1)), -ring_pow(ring.q, u(i - 1)), order));
  }
  XSeries<R> product = series_product<R>(factors, order, one);
  for (long k = 0; k <= n; ++k) {
    const R want =
        signed_value(ring_pow(ring.q, choose2(u(k))) * ring_pow(ring.p, choose2(u(n - k))) * ring.coeff(n, k), u(k));
    require_coefficient("gf_c", product[u(k)], want, n, k);
  }
  return product;
}

template <class R>
bool ab_product_impl(const RingView<R>& ring, long n, std::size_t order) {
  if (n < 1) {
    throw ParameterError("A_n B_n = 1 needs n >= 1");
  }
  const R one = one_like(ring.p);
  XSeries<R> a = expand_A_impl(ring, n);
  XSeries<R> a_full(a.coeffs(), order);
  XSeries<R> product = a_full * expand_B_impl(ring, n, order);
  return product == XSeries<R>::constant(one, order);
}

template <class R>
XSeries<R> binomial_like_product_impl(const RingView<R>& ring, long n, BinomialForm form) {
  const R one = one_like(ring.p);
  const std::size_t order = u(n) + 1;
  std::vector<XSeries<R>> factors;
  // index j of each factor multiplies x^j y^(1-j)
  for (long i = 1; i <= n; ++i) {
    if (form == BinomialForm::A) {
      factors.push_back(XSeries<R>::linear(ring_pow(ring.p, u(n - i)) * ring_pow(ring.q, u(i - 1)), one, order));
    } else {
      factors.push_back(XSeries<R>::linear(ring_pow(ring.q, u(i - 1)), ring_pow(ring.p, u(i - 1)), order));
    }
  }
  return series_product<R>(factors, order, one);
}

template <class R>
CheckOutcome binomial_like_impl(const RingView<R>& ring, long n, BinomialForm form) {
  if (n < 1) {
    throw ParameterError("binomial-like theorem needs n >= 1");
  }
  const XSeries<R> product = binomial_like_product_impl(ring, n, form);
  for (long k = 0; k <= n; ++k) {
    R want = ring.coeff(n, k) * ring_pow(ring.q, choose2(u(k)));
    want *= ring_pow(ring.p, form == BinomialForm::A ? choose2(u(k)) : choose2(u(n - k)));
    const R& got = product[u(n - k)];
    if (!(got == want)) {
      using tnomial::to_string;
      return Mismatch{n, k, to_string(got), to_string(want), form == BinomialForm::A ? "form A" : "form B"};
    }
  }
  return std::nullopt;
}

XSeries<BigInt> scaled(const XSeries<BigInt>& s, const BigInt& c) {
  std::vector<BigInt> out = s.coeffs();
  for (auto& x : out) {
    x *= c;
  }
  if (out.empty()) {
    out.push_back(0);
  }
  return XSeries<BigInt>(std::move(out), s.order());
}

}  // namespace

XSeries<BigInt> expand_A(const SeqParams& params, long n) { return expand_A_impl(numeric_view(params), n); }
XSeries<BiPoly> expand_A_symbolic(long n) { return expand_A_impl(symbolic_view(), n); }

XSeries<BigInt> expand_B(const SeqParams& params, long n, std::size_t order) {
  return expand_B_impl(numeric_view(params), n, order);
}
XSeries<BiPoly> expand_B_symbolic(long n, std::size_t order) { return expand_B_impl(symbolic_view(), n, order); }

XSeries<BigInt> expand_C(const SeqParams& params, long n) { return expand_C_impl(numeric_view(params), n); }
XSeries<BiPoly> expand_C_symbolic(long n) { return expand_C_impl(symbolic_view(), n); }

bool ab_product_is_one(const SeqParams& params, long n, std::size_t order) {
  return ab_product_impl(numeric_view(params), n, order);
}
bool ab_product_is_one_symbolic(long n, std::size_t order) { return ab_product_impl(symbolic_view(), n, order); }

CheckOutcome binomial_like_symbolic(long n, BinomialForm form) { return binomial_like_impl(symbolic_view(), n, form); }
CheckOutcome binomial_like(const SeqParams& params, long n, BinomialForm form) {
  return binomial_like_impl(numeric_view(params), n, form);
}
XSeries<BiPoly> binomial_like_product(long n, BinomialForm form) {
  if (n < 0) {
    throw ParameterError("binomial-like product needs n >= 0");
  }
  return binomial_like_product_impl(symbolic_view(), n, form);
}

bool orthogonality(const SeqParams& params, long n, long s) {
  if (n < 1 || s < 1) {
    throw ParameterError("orthogonality needs n, s >= 1");
  }
  const auto c = numeric_view(params).coeff;
  const BigInt pq = BigInt(params.p) * params.q;

  BigInt first = 0;
  for (long k = 0; k <= s; ++k) {
    first += signed_value(ipow(pq, choose2(u(k))) * c(n, k) * c(n + s - k - 1, n - 1), u(k));
  }
  BigInt second = 0;
  for (long k = 0; k <= n; ++k) {
    second += signed_value(c(n + k - 1, k) * ipow(pq, choose2(u(n - k))) * c(n, k), u(n - k));
  }
  const std::size_t order = u(s) + 1;
  XSeries<BigInt> a(expand_A(params, n).coeffs(), order);
  const BigInt cauchy = (a * expand_B(params, n, order))[u(s)];
  return first == 0 && second == 0 && cauchy == 0;
}

VandermondeOutcome vandermonde(const SeqParams& params, long n, long m, long k) {
  if (n < 0 || m < 0 || k < 0 || k > n + m) {
    throw ParameterError("vandermonde needs n, m >= 0 and 0 <= k <= n + m");
  }
  const auto c = numeric_view(params).coeff;
  VandermondeOutcome out{c(n + m, k), 0, 0};
  for (long s = 0; s <= k; ++s) {
    // terms with s > n or k - s > m vanish; the remaining p-exponents are >= 0
    if (s > n || k - s > m) {
      continue;
    }
    const BigInt shared = ipow(params.q, u((n - s) * (k - s))) * c(n, s) * c(m, k - s);
    out.proof_rhs += ipow(params.p, u((m + s - k) * s)) * shared;
    out.statement_rhs += ipow(params.p, u(m - k + s)) * shared;
  }
  return out;
}

bool equal1_check(const SeqParams& params, long k) {
  if (k < 0) {
    throw ParameterError("equal1 needs k >= 0");
  }
  return coeff_partial_fractions(params, k, k) == Rational(1);
}

BigInt gaussian_explicit(long q_val, long n, long k) {
  if (q_val == 1) {
    throw DegenerateParameters("Gaussian closed form needs q != 1");
  }
  if (k < 0 || n < k) {
    throw ParameterError("Gaussian closed form needs n >= k >= 0");
  }
  const BigInt q = q_val;
  std::vector<BigInt> qfact{1};  // prod_{j=1..i} (q^j - 1)
  for (long j = 1; j <= k; ++j) {
    const BigInt f = ipow(q, u(j)) - 1;
    if (f == 0) {
      throw DegenerateParameters("Gaussian closed form needs q^j != 1 for j <= k");
    }
    qfact.push_back(qfact.back() * f);
  }
  Rational sum = 0;
  for (long i = 0; i <= k; ++i) {
    const std::uint64_t e = u((k - i) * (n - i)) - choose2(u(k - i));
    Rational term(ipow(q, e), qfact[i] * qfact[k - i]);
    sum += (i % 2 == 0) ? term : -term;
  }
  const BigInt value = sum.to_integer();
  const BigInt want = coeff_recurrence({SeqParams(1, q_val), n, k});
  require_coefficient("gaussian_explicit", value, want, n, k);
  return value;
}

CheckOutcome phi_basis_check(long q_val, long n) {
  if (n < 0) {
    throw ParameterError("phi basis needs n >= 0");
  }
  const std::size_t order = u(n) + 1;
  const SeqParams params(1, q_val);
  std::vector<XSeries<BigInt>> phi{XSeries<BigInt>::constant(1, order)};
  for (long s = 0; s < n; ++s) {
    phi.push_back(phi.back() * XSeries<BigInt>::linear(-ipow(q_val, u(s)), 1, order));
  }
  XSeries<BigInt> basis_sum = XSeries<BigInt>::constant(0, order);
  std::vector<BigInt> expansion(order, 0);
  for (long k = 0; k <= n; ++k) {
    const BigInt c = coeff_recurrence({params, n, k});
    basis_sum += scaled(phi[k], c);
    expansion[k] = signed_value(ipow(q_val, choose2(u(n - k))) * c, u(n - k));
  }
  std::vector<BigInt> monomial(order, 0);
  monomial[n] = 1;
  const XSeries<BigInt> x_n(monomial, order);
  for (long j = 0; j <= n; ++j) {
    if (basis_sum[j] != x_n[j]) {
      return Mismatch{n, j, basis_sum[j].str(), x_n[j].str(), "x^n in the Phi basis"};
    }
    if (phi[n][j] != expansion[j]) {
      return Mismatch{n, j, phi[n][j].str(), expansion[j].str(), "Phi_n expansion"};
    }
  }
  return std::nullopt;
}

BigInt fibonomial(long alpha, long n, long k) {
  if (k < 0 || n < k) {
    throw ParameterError("fibonomial needs n >= k >= 0");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 1; i <= n; ++i) {
    num *= alpha_fibonacci(alpha, i);
  }
  for (long i = 1; i <= k; ++i) {
    den *= alpha_fibonacci(alpha, i);
  }
  for (long i = 1; i <= n - k; ++i) {
    den *= alpha_fibonacci(alpha, i);
  }
  return exact_div(num, den);
}

IdentityReport fibonomial_suite(long alpha, long n_max) {
  if (alpha < 1 || n_max < 1) {
    throw ParameterError("fibonomial suite needs alpha >= 1 and n_max >= 1");
  }
  ReportBuilder report(IdentityId::fibonomial, std::nullopt, n_max, n_max);
  report.alpha(alpha);
  const auto F = [alpha](long i) { return alpha_fibonacci(alpha, i); };
  const std::size_t order = u(n_max) + 1;

  std::vector<std::vector<BigInt>> fib(order);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      fib[n].push_back(fibonomial(alpha, n, k));
    }
  }

  for (long n = 2; n <= n_max; ++n) {
    for (long k = 1; k < n; ++k) {
      const long m = n - k;
      report.expect_equal(F(n), F(m - 1) * F(k) + F(k + 1) * F(m), n, k, "split m=" + std::to_string(m));
    }
  }

  for (long n = 2; n <= n_max; ++n) {
    for (long k = 1; k < n; ++k) {
      const long m = n - k;
      report.expect_equal(fib[n][k], F(m - 1) * fib[n - 1][k - 1] + F(k + 1) * fib[n - 1][k], n, k,
                          "fibonomial recurrence");
    }
  }

  const QuadElem phi_p = QuadElem::phi_plus(alpha);
  const QuadElem phi_m = QuadElem::phi_minus(alpha);
  report.expect_equal(phi_p * phi_m, QuadElem::integer(-1, alpha), 0, 0, "phi+ phi- = -1");

  // Pascal-like triangle run directly in Z[phi] with p = phi+, q = phi-
  const auto tri = tnomial_triangle(phi_p, phi_m, n_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      report.expect_equal(tri[n][k], QuadElem::integer(fib[n][k], alpha), n, k, "triangle over Z[phi]");
    }
  }

  const QuadElem one = QuadElem::integer(1, alpha);
  for (long n = 0; n <= n_max; ++n) {
    std::vector<XSeries<QuadElem>> factors;
    const std::size_t deg_order = u(n) + 1;
    for (long s = 1; s <= n; ++s) {
      factors.push_back(
          XSeries<QuadElem>::linear(one, -(ring_pow(phi_m, u(s - 1)) * ring_pow(phi_p, u(n - s))), deg_order));
    }
    const auto product = series_product<QuadElem>(factors, deg_order, one);
    for (long k = 0; k <= n; ++k) {
      const QuadElem want = QuadElem::integer(signed_value(fib[n][k], choose2(u(k + 1))), alpha);
      report.expect_equal(product[u(k)], want, n, k, "generating function over Z[phi]");
    }
  }

  for (long k = 0; k <= n_max; ++k) {
    std::vector<XSeries<QuadElem>> factors;
    std::vector<QuadElem> shift(u(k) + 1, QuadElem::integer(0, alpha));
    shift[k] = one;
    factors.emplace_back(shift, order);
    for (long s = 0; s <= k; ++s) {
      factors.push_back(XSeries<QuadElem>::geometric(ring_pow(phi_p, u(k - s)) * ring_pow(phi_m, u(s)), order));
    }
    const auto column = series_product<QuadElem>(factors, order, one);
    for (long n = 0; n <= n_max; ++n) {
      const BigInt want = n >= k ? fib[n][k] : BigInt(0);
      report.expect_equal(column[u(n)], QuadElem::integer(want, alpha), n, k, "column generating function");
    }
  }
  return report.finish();
}

// ---------------------------------------------------------------------------

std::vector<SeqParams> param_grid(std::int64_t lo, std::int64_t hi) {
  std::vector<SeqParams> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    for (std::int64_t q = lo; q <= hi; ++q) {
      out.emplace_back(p, q);
    }
  }
  return out;
}

IdentityReport sweep_route_agreement(const SeqParams& params, long n_max) {
  ReportBuilder report(IdentityId::route_agreement, params, n_max, n_max);
  const BigInt pq = BigInt(params.p) * params.q;
  for (long n = 0; n <= n_max && !report.failed(); ++n) {
    for (long k = 0; k <= n; ++k) {
      const CoeffQuery query{params, n, k};
      const BigInt base = coeff_recurrence(query);
      report.expect_equal(coeff_symbolic(n, k).eval(params.p, params.q), base, n, k, "symbolic");
      if (factorial_route_defined(params, n, k)) {
        report.expect_equal(coeff_factorial(query), base, n, k, "factorial");
      }
      if (product_route_defined(params, k)) {
        report.expect_equal(coeff_product(query), base, n, k, "product");
      }
      if (n >= 1) {
        report.expect_equal(coeff_lambda_subset(params, n, k), base * ipow(pq, choose2(u(k))), n, k,
                            "lambda-subset");
      }
      report.expect_equal(coeff_lambda_multiset(params, n - k + 1, k), base, n, k, "lambda-multiset");
      if (partial_fractions_defined(params, k)) {
        report.expect_equal(coeff_partial_fractions(params, n, k), Rational(base), n, k, "partial-fractions");
      }
    }
  }
  return report.finish();
}

IdentityReport sweep_complementation(const SeqParams& params, long n_max) {
  ReportBuilder report(IdentityId::complementation, params, n_max, n_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      report.expect_equal(coeff_recurrence({params, n, k}), coeff_recurrence({params, n, n - k}), n, k);
    }
  }
  return report.finish();
}

IdentityReport sweep_iterative_rule(const SeqParams& params, long n_max) {
  ReportBuilder report(IdentityId::iterative_rule, params, n_max, n_max);
  const auto c = [&params](long n, long k) { return coeff_recurrence({params, n, k}); };
  for (long n = 0; n <= n_max; ++n) {
    for (long m = 0; m <= n; ++m) {
      for (long k = 0; k <= m; ++k) {
        report.expect_equal(c(n, m) * c(m, k), c(n, k) * c(n - k, n - m), n, k, "m=" + std::to_string(m));
      }
    }
  }
  return report.finish();
}

IdentityReport sweep_sequence_routes(const SeqParams& params, long n_max) {
  ReportBuilder report(IdentityId::sequence_routes, params, n_max, 0);
  for (long n = 0; n <= n_max; ++n) {
    const BigInt closed = term_closed(params, n);
    report.expect_equal(term_sum(params, n), closed, n, 0, "sum");
    report.expect_equal(term_generating_function(params, n), closed, n, 0, "generating function");
    report.expect_equal(term_symbolic(n).eval(params.p, params.q) * params.scale, closed, n, 0, "symbolic");
  }
  for (long n = 2; n <= n_max; ++n) {
    for (long k = 1; k < n; ++k) {
      if (!check_split_recurrence(params, k, n - k)) {
        report.fail({n, k, term_closed(params, n).str(), "p^m k_T + q^k m_T", "split recurrence"});
      }
    }
  }
  for (long n = 1; n <= std::min(n_max, 10L); ++n) {
    for (long parts = 1; parts <= n; ++parts) {
      CompositionStream stream(n, parts);
      while (auto c = stream.next()) {
        if (!check_composition_recurrence(params, *c)) {
          report.fail({n, parts, term_closed(params, n).str(), "composition sum", "composition recurrence"});
        }
      }
    }
  }
  return report.finish();
}

namespace {

template <class F>
void record_violation(ReportBuilder& report, F&& body) {
  try {
    body();
  } catch (const IdentityViolation& e) {
    report.fail({e.n(), e.k(), e.lhs(), e.rhs(), e.identity()});
  }
}

}  // namespace

std::vector<IdentityReport> sweep_generating_functions(const SeqParams& params, long n_max, std::size_t order) {
  ReportBuilder a(IdentityId::gf_a, params, n_max, n_max);
  ReportBuilder b(IdentityId::gf_b, params, n_max, static_cast<long>(order) - 1);
  ReportBuilder c(IdentityId::gf_c, params, n_max, n_max);
  ReportBuilder ab(IdentityId::gf_ab_product, params, n_max, static_cast<long>(order) - 1);
  for (long n = 0; n <= n_max; ++n) {
    record_violation(a, [&] { expand_A(params, n); });
    record_violation(c, [&] { expand_C(params, n); });
    if (n >= 1) {
      record_violation(b, [&] { expand_B(params, n, order); });
      if (!ab_product_is_one(params, n, order)) {
        ab.fail({n, 0, "A_n B_n", "1", "truncated product differs from 1"});
      }
    }
  }
  return {a.finish(), b.finish(), c.finish(), ab.finish()};
}

std::vector<IdentityReport> sweep_generating_functions_symbolic(long n_max, std::size_t order) {
  ReportBuilder a(IdentityId::gf_a, std::nullopt, n_max, n_max);
  ReportBuilder b(IdentityId::gf_b, std::nullopt, n_max, static_cast<long>(order) - 1);
  ReportBuilder c(IdentityId::gf_c, std::nullopt, n_max, n_max);
  ReportBuilder ab(IdentityId::gf_ab_product, std::nullopt, n_max, static_cast<long>(order) - 1);
  for (long n = 0; n <= n_max; ++n) {
    record_violation(a, [&] { expand_A_symbolic(n); });
    record_violation(c, [&] { expand_C_symbolic(n); });
    if (n >= 1) {
      record_violation(b, [&] { expand_B_symbolic(n, order); });
      if (!ab_product_is_one_symbolic(n, order)) {
        ab.fail({n, 0, "A_n B_n", "1", "truncated product differs from 1"});
      }
    }
  }
  return {a.finish(), b.finish(), c.finish(), ab.finish()};
}

std::vector<IdentityReport> sweep_binomial_like_symbolic(long n_max) {
  ReportBuilder a(IdentityId::binomial_like_a, std::nullopt, n_max, n_max);
  ReportBuilder b(IdentityId::binomial_like_b, std::nullopt, n_max, n_max);
  for (long n = 1; n <= n_max; ++n) {
    if (auto m = binomial_like_symbolic(n, BinomialForm::A)) {
      a.fail(*m);
    }
    if (auto m = binomial_like_symbolic(n, BinomialForm::B)) {
      b.fail(*m);
    }
  }
  return {a.finish(), b.finish()};
}

std::vector<IdentityReport> sweep_binomial_like(const SeqParams& params, long n_max) {
  ReportBuilder a(IdentityId::binomial_like_a, params, n_max, n_max);
  ReportBuilder b(IdentityId::binomial_like_b, params, n_max, n_max);
  for (long n = 1; n <= n_max; ++n) {
    if (auto m = binomial_like(params, n, BinomialForm::A)) {
      a.fail(*m);
    }
    if (auto m = binomial_like(params, n, BinomialForm::B)) {
      b.fail(*m);
    }
  }
  return {a.finish(), b.finish()};
}

IdentityReport sweep_orthogonality(const SeqParams& params, long n_max, long s_max) {
  ReportBuilder report(IdentityId::orthogonality, params, n_max, s_max);
  for (long n = 1; n <= n_max; ++n) {
    for (long s = 1; s <= s_max; ++s) {
      if (!orthogonality(params, n, s)) {
        report.fail({n, s, "nonzero", "0", "s=" + std::to_string(s)});
      }
    }
  }
  return report.finish();
}

std::vector<IdentityReport> sweep_vandermonde(const SeqParams& params, long nm_max) {
  ReportBuilder proof(IdentityId::vandermonde_proof, params, nm_max, 2 * nm_max);
  ReportBuilder statement(IdentityId::vandermonde_statement, params, nm_max, 2 * nm_max);
  statement.diagnostic();
  for (long n = 0; n <= nm_max; ++n) {
    for (long m = 0; m <= nm_max; ++m) {
      for (long k = 0; k <= n + m; ++k) {
        const auto v = vandermonde(params, n, m, k);
        const std::string where = "m=" + std::to_string(m);
        proof.expect_equal(v.proof_rhs, v.lhs, n, k, where);
        statement.expect_equal(v.statement_rhs, v.lhs, n, k, where);
      }
    }
  }
  return {proof.finish(), statement.finish()};
}

IdentityReport sweep_equal1(const SeqParams& params, long k_max) {
  ReportBuilder report(IdentityId::equal1, params, k_max, k_max);
  for (long k = 0; k <= k_max; ++k) {
    if (!partial_fractions_defined(params, k)) {
      continue;
    }
    report.expect_equal(coeff_partial_fractions(params, k, k), Rational(1), k, k);
  }
  return report.finish();
}

std::vector<IdentityReport> sweep_inversion(const SeqParams& params, long n_max) {
  ReportBuilder product(IdentityId::inversion_matrix, params, n_max, n_max);
  ReportBuilder oracle_agreement(IdentityId::inversion_oracle, params, n_max, n_max);
  const std::size_t order = u(n_max) + 1;
  oracle::TriMatrix m(order);
  oracle::TriMatrix inv(order);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      m.set(u(n), u(k), coeff_recurrence({params, n, k}));
      inv.set(u(n), u(k), coeff_inverse({params, n, k}));
    }
  }
  const auto identity = oracle::TriMatrix::identity(order);
  const auto left = m * inv;
  const auto right = inv * m;
  const auto reference = oracle::invert_triangular(m);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      product.expect_equal(left.at(u(n), u(k)), identity.at(u(n), u(k)), n, k, "C * C^-1");
      product.expect_equal(right.at(u(n), u(k)), identity.at(u(n), u(k)), n, k, "C^-1 * C");
      oracle_agreement.expect_equal(inv.at(u(n), u(k)), reference.at(u(n), u(k)), n, k);
    }
  }
  return {product.finish(), oracle_agreement.finish()};
}

IdentityReport sweep_gaussian_explicit(long q_val, long n_max) {
  ReportBuilder report(IdentityId::gaussian_explicit, SeqParams(1, q_val), n_max, n_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      record_violation(report, [&] { gaussian_explicit(q_val, n, k); });
      // q-Pascal rule C(n,k) = C(n-1,k-1) + q^k C(n-1,k), restated at p = 1
      if (n >= 1) {
        const SeqParams g(1, q_val);
        const BigInt prev_left = k >= 1 ? coeff_recurrence({g, n - 1, k - 1}) : BigInt(0);
        const BigInt prev_right = k <= n - 1 ? coeff_recurrence({g, n - 1, k}) : BigInt(0);
        report.expect_equal(coeff_factorial({g, n, k}), prev_left + ipow(q_val, u(k)) * prev_right, n, k,
                            "q-Pascal");
      }
    }
  }
  return report.finish();
}

IdentityReport sweep_gaussian_inversion(long q_val, long n_max) {
  const SeqParams g(1, q_val);
  ReportBuilder report(IdentityId::gaussian_inversion, g, n_max, n_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      const BigInt want = signed_value(ipow(q_val, choose2(u(n - k))) * coeff_recurrence({g, n, k}), u(n - k));
      report.expect_equal(coeff_inverse({g, n, k}), want, n, k);
    }
  }
  return report.finish();
}

IdentityReport sweep_phi_basis(long q_val, long n_max) {
  ReportBuilder report(IdentityId::phi_basis, SeqParams(1, q_val), n_max, n_max);
  for (long n = 0; n <= n_max; ++n) {
    if (auto m = phi_basis_check(q_val, n)) {
      report.fail(*m);
    }
  }
  return report.finish();
}

IdentityReport sweep_pascal(long n_max) {
  ReportBuilder report(IdentityId::pascal, SeqParams(1, 1), n_max, n_max);
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= n; ++k) {
      report.expect_equal(coeff_recurrence({SeqParams(1, 1), n, k}), binomial(n, k), n, k);
    }
  }
  return report.finish();
}

IdentityReport sweep_scale_invariance(const SeqParams& params, long n_max) {
  ReportBuilder report(IdentityId::scale_invariance, params, n_max, n_max);
  for (std::int64_t scale = 1; scale <= 3; ++scale) {
    const SeqParams scaled_params(params.p, params.q, scale);
    for (long n = 0; n <= n_max; ++n) {
      for (long k = 0; k <= n; ++k) {
        if (!factorial_route_defined(scaled_params, n, k)) {
          continue;
        }
        report.expect_equal(coeff_factorial({scaled_params, n, k}), coeff_recurrence({params, n, k}), n, k,
                            "scale=" + std::to_string(scale));
      }
      if (n >= 1 && params.p >= 1 && params.q >= 1) {
        const BigInt v1 = oracle::volume_ratio(SeqParams(params.p, params.q, 1), 1, n);
        report.expect_equal(oracle::volume_ratio(scaled_params, 1, n), v1, n, 1,
                            "volume ratio scale=" + std::to_string(scale));
      }
    }
  }
  return report.finish();
}

}  // namespace tnomial
