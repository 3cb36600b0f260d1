#pragma once

#include <optional>
#include <vector>

#include "tnomial/bipoly.hpp"
#include "tnomial/exact.hpp"
#include "tnomial/quad.hpp"
#include "tnomial/report.hpp"
#include "tnomial/series.hpp"
#include "tnomial/tseq.hpp"

namespace tnomial {

/// Empty when the identity holds.
using CheckOutcome = std::optional<Mismatch>;

// ---------------------------------------------------------------------------
// Generating functions. Each expansion asserts its coefficient formula and
// throws IdentityViolation on the first mismatch.

/// prod_{i=1..n} (1 - q^(i-1) p^(n-i) x); coefficient k must be
/// (-1)^k (pq)^binom(k,2) C(n,k).
XSeries<BigInt> expand_A(const SeqParams& params, long n);
XSeries<BiPoly> expand_A_symbolic(long n);

/// prod_{i=1..n} 1/(1 - q^(i-1) p^(n-i) x) to `order`; coefficient k must be
/// C(n+k-1,k). Needs n >= 1.
XSeries<BigInt> expand_B(const SeqParams& params, long n, std::size_t order);
XSeries<BiPoly> expand_B_symbolic(long n, std::size_t order);

/// prod_{i=1..n} (p^(i-1) - q^(i-1) x); coefficient k must be
/// (-1)^k q^binom(k,2) p^binom(n-k,2) C(n,k).
XSeries<BigInt> expand_C(const SeqParams& params, long n);
XSeries<BiPoly> expand_C_symbolic(long n);

/// A_n(x) B_n(x) == 1 up to `order`.
bool ab_product_is_one(const SeqParams& params, long n, std::size_t order);
bool ab_product_is_one_symbolic(long n, std::size_t order);

// ---------------------------------------------------------------------------

enum class BinomialForm { A, B };

/// Expands the homogeneous product in (x, y) and compares coefficients:
/// form A: prod_{i=1..n} (x + p^(n-i) q^(i-1) y) against
///         sum_k C(n,k) (pq)^binom(k,2) y^k x^(n-k);
/// form B: prod_{i=0..n-1} (p^i x + q^i y) against
///         sum_k C(n,k) q^binom(k,2) p^binom(n-k,2) y^k x^(n-k).
CheckOutcome binomial_like_symbolic(long n, BinomialForm form);
CheckOutcome binomial_like(const SeqParams& params, long n, BinomialForm form);

/// The homogeneous product itself, as a series in x whose index-j coefficient
/// multiplies x^j y^(n-j).
XSeries<BiPoly> binomial_like_product(long n, BinomialForm form);

/// sum_{k=0..s} (-1)^k (pq)^binom(k,2) C(n,k) C(n+s-k-1, n-1) == 0, the
/// s = n form with the factors reversed, and coefficient s of A_n B_n.
bool orthogonality(const SeqParams& params, long n, long s);

struct VandermondeOutcome {
  BigInt lhs;            // C(n+m, k)
  BigInt proof_rhs;      // exponent p^((m+s-k)s)
  BigInt statement_rhs;  // exponent p^(m-k+s)
  bool proof_holds() const { return lhs == proof_rhs; }
  bool statement_holds() const { return lhs == statement_rhs; }
};

/// Both readings of the convolution identity
/// C(n+m,k) = sum_s p^(e_s) q^((n-s)(k-s)) C(n,s) C(m,k-s).
VandermondeOutcome vandermonde(const SeqParams& params, long n, long m, long k);

/// The alternating partial-fraction sum at n = k; must be exactly 1.
/// DegenerateParameters when the nodes coincide.
bool equal1_check(const SeqParams& params, long k);

/// The closed alternating q-power sum for the Gaussian coefficient (p = 1).
/// Throws IdentityViolation when it disagrees with the recurrence and
/// DegenerateParameters when q^j = 1 for some j <= k.
BigInt gaussian_explicit(long q_val, long n, long k);

/// x^n == sum_k C(n,k)_q Phi_k(x) and
/// Phi_n(x) == sum_k (-1)^(n-k) q^binom(n-k,2) C(n,k)_q x^k,
/// Phi_n(x) = prod_{s<n} (x - q^s).
CheckOutcome phi_basis_check(long q_val, long n);

/// Splitting recurrence of the alpha-Fibonacci numbers, the Fibonomial
/// Pascal-like recurrence, and the generating functions in Z[phi].
IdentityReport fibonomial_suite(long alpha, long n_max);

/// Fibonomial coefficients by factorial ratio of alpha-Fibonacci numbers.
BigInt fibonomial(long alpha, long n, long k);

// ---------------------------------------------------------------------------
// Sweeps producing reports.

std::vector<SeqParams> param_grid(std::int64_t lo, std::int64_t hi);

IdentityReport sweep_route_agreement(const SeqParams& params, long n_max);
IdentityReport sweep_complementation(const SeqParams& params, long n_max);
IdentityReport sweep_iterative_rule(const SeqParams& params, long n_max);
IdentityReport sweep_sequence_routes(const SeqParams& params, long n_max);
/// gf_a, gf_b, gf_c and gf_ab_product.
std::vector<IdentityReport> sweep_generating_functions(const SeqParams& params, long n_max, std::size_t order);
std::vector<IdentityReport> sweep_generating_functions_symbolic(long n_max, std::size_t order);
/// binomial_like_a and binomial_like_b.
std::vector<IdentityReport> sweep_binomial_like_symbolic(long n_max);
std::vector<IdentityReport> sweep_binomial_like(const SeqParams& params, long n_max);
IdentityReport sweep_orthogonality(const SeqParams& params, long n_max, long s_max);
/// The proof-exponent reading (a check) and the statement-exponent reading
/// (a diagnostic) for all n, m <= nm_max, k <= n + m.
std::vector<IdentityReport> sweep_vandermonde(const SeqParams& params, long nm_max);
IdentityReport sweep_equal1(const SeqParams& params, long k_max);
/// Rows 0..n_max: [C] * [C^-1] == I by the composition formula, and entrywise agreement
/// with exact triangular inversion.
std::vector<IdentityReport> sweep_inversion(const SeqParams& params, long n_max);
IdentityReport sweep_gaussian_explicit(long q_val, long n_max);
IdentityReport sweep_gaussian_inversion(long q_val, long n_max);
IdentityReport sweep_phi_basis(long q_val, long n_max);
IdentityReport sweep_pascal(long n_max);
IdentityReport sweep_scale_invariance(const SeqParams& params, long n_max);

}  // namespace tnomial
