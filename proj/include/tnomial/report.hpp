#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnomial/tseq.hpp"

namespace tnomial {

enum class IdentityId {
  route_agreement,
  complementation,
  iterative_rule,
  gf_a,
  gf_b,
  gf_c,
  gf_ab_product,
  binomial_like_a,
  binomial_like_b,
  orthogonality,
  vandermonde_proof,
  vandermonde_statement,
  equal1,
  inversion_matrix,
  inversion_oracle,
  fibonomial,
  gaussian_explicit,
  gaussian_inversion,
  phi_basis,
  pascal,
  scale_invariance,
  sequence_routes,
  selections,
  bipartite_multigraphs,
  acyclic_routes,
  inverse_relation,
  volume_ratio,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identity_ids();

/// Location and both sides of the first failing instance.
struct Mismatch {
  long n = 0;
  long k = 0;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// A `check` must hold; a `diagnostic` records an outcome (such as a known
/// counterexample) without counting toward the run's pass/fail status.
enum class ReportKind { check, diagnostic };

struct IdentityReport {
  IdentityId id = IdentityId::route_agreement;
  /// Empty for symbolic sweeps and for alpha-parametrized families.
  std::optional<SeqParams> params;
  std::optional<long> alpha;
  long n_max = 0;
  long k_max = 0;
  std::optional<Mismatch> counterexample;
  ReportKind kind = ReportKind::check;

  bool holds() const { return !counterexample.has_value(); }
  bool counts_as_failure() const { return kind == ReportKind::check && !holds(); }
};

/// Accumulates comparisons, keeping only the first mismatch.
class ReportBuilder {
 public:
  ReportBuilder(IdentityId id, std::optional<SeqParams> params, long n_max, long k_max);

  ReportBuilder& alpha(long a);
  ReportBuilder& diagnostic();

  template <class T>
  bool expect_equal(const T& lhs, const T& rhs, long n, long k, std::string detail = {}) {
    if (lhs == rhs) {
      return true;
    }
    using tnomial::to_string;
    fail({n, k, to_string(lhs), to_string(rhs), std::move(detail)});
    return false;
  }
  void fail(Mismatch m);
  bool failed() const { return report_.counterexample.has_value(); }

  IdentityReport finish() const { return report_; }

 private:
  IdentityReport report_;
};

}  // namespace tnomial
