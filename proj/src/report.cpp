#include "tnomial/report.hpp"

#include <array>
#include <utility>

namespace tnomial {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 27> kNames{{
    {IdentityId::route_agreement, "route_agreement"},
    {IdentityId::complementation, "complementation"},
    {IdentityId::iterative_rule, "iterative_rule"},
    {IdentityId::gf_a, "gf_a"},
    {IdentityId::gf_b, "gf_b"},
    {IdentityId::gf_c, "gf_c"},
    {IdentityId::gf_ab_product, "gf_ab_product"},
    {IdentityId::binomial_like_a, "binomial_like_a"},
    {IdentityId::binomial_like_b, "binomial_like_b"},
    {IdentityId::orthogonality, "orthogonality"},
    {IdentityId::vandermonde_proof, "vandermonde_proof"},
    {IdentityId::vandermonde_statement, "vandermonde_statement"},
    {IdentityId::equal1, "equal1"},
    {IdentityId::inversion_matrix, "inversion_matrix"},
    {IdentityId::inversion_oracle, "inversion_oracle"},
    {IdentityId::fibonomial, "fibonomial"},
    {IdentityId::gaussian_explicit, "gaussian_explicit"},
    {IdentityId::gaussian_inversion, "gaussian_inversion"},
    {IdentityId::phi_basis, "phi_basis"},
    {IdentityId::pascal, "pascal"},
    {IdentityId::scale_invariance, "scale_invariance"},
    {IdentityId::sequence_routes, "sequence_routes"},
    {IdentityId::selections, "selections"},
    {IdentityId::bipartite_multigraphs, "bipartite_multigraphs"},
    {IdentityId::acyclic_routes, "acyclic_routes"},
    {IdentityId::inverse_relation, "inverse_relation"},
    {IdentityId::volume_ratio, "volume_ratio"},
}};

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) {
      return name;
    }
  }
  return "unknown";
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (const auto& [key, known] : kNames) {
    if (known == name) {
      return key;
    }
  }
  return std::nullopt;
}

const std::vector<IdentityId>& all_identity_ids() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& entry : kNames) {
      out.push_back(entry.first);
    }
    return out;
  }();
  return ids;
}

ReportBuilder::ReportBuilder(IdentityId id, std::optional<SeqParams> params, long n_max, long k_max) {
  report_.id = id;
  report_.params = std::move(params);
  report_.n_max = n_max;
  report_.k_max = k_max;
}

ReportBuilder& ReportBuilder::alpha(long a) {
  report_.alpha = a;
  return *this;
}

ReportBuilder& ReportBuilder::diagnostic() {
  report_.kind = ReportKind::diagnostic;
  return *this;
}

void ReportBuilder::fail(Mismatch m) {
  if (!report_.counterexample) {
    report_.counterexample = std::move(m);
  }
}

}  // namespace tnomial
