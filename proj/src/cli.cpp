#include "tnomial/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "tnomial/coeff.hpp"
#include "tnomial/identities.hpp"
#include "tnomial/oracle_checks.hpp"

namespace tnomial::cli {

namespace {

using Json = nlohmann::json;

constexpr std::int64_t kGridLo = -2;
constexpr std::int64_t kGridHi = 4;
constexpr std::int64_t kOracleGridLo = 1;
constexpr std::int64_t kOracleGridHi = 3;

long bound_or(const RunConfig& config, long fallback) { return config.n_max.value_or(fallback); }

// Grid points for a suite: the single point given by --p/--q, else the
// default grid, optionally sampled.
std::vector<SeqParams> points(const RunConfig& config, std::int64_t lo, std::int64_t hi) {
  if (config.p || config.q) {
    if (!config.p || !config.q) {
      throw ParameterError("--p and --q must be given together");
    }
    return {SeqParams(*config.p, *config.q, config.scale)};
  }
  auto grid = param_grid(lo, hi);
  if (config.seed) {
    std::vector<SeqParams> picked;
    std::mt19937_64 rng(*config.seed);
    std::sample(grid.begin(), grid.end(), std::back_inserter(picked), config.samples, rng);
    return picked;
  }
  return grid;
}

std::vector<long> alphas(const RunConfig& config, std::vector<long> fallback) {
  if (config.alpha) {
    return {*config.alpha};
  }
  return fallback;
}

// q values for the p = 1 specializations.
std::vector<std::int64_t> gaussian_qs(const RunConfig& config) {
  if (config.q) {
    return {*config.q};
  }
  std::vector<std::int64_t> out;
  for (const auto& pt : points(config, kGridLo, kGridHi)) {
    if (std::find(out.begin(), out.end(), pt.q) == out.end()) {
      out.push_back(pt.q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void append(std::vector<IdentityReport>& out, std::vector<IdentityReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

using Suite = std::function<void(const RunConfig&, std::vector<IdentityReport>&)>;

const std::vector<std::pair<std::string, Suite>>& verify_suites() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"route_agreement",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) out.push_back(sweep_route_agreement(pt, bound_or(c, 12)));
       }},
      {"complementation",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) out.push_back(sweep_complementation(pt, bound_or(c, 12)));
       }},
      {"iterative_rule",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) out.push_back(sweep_iterative_rule(pt, bound_or(c, 8)));
       }},
      {"sequence_routes",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) out.push_back(sweep_sequence_routes(pt, bound_or(c, 12)));
       }},
      {"generating_functions",
       [](const RunConfig& c, auto& out) {
         const long n_max = bound_or(c, 8);
         const std::size_t order = static_cast<std::size_t>(std::max(n_max, 9L)) + 1;
         if (c.mode == Mode::symbolic) {
           append(out, sweep_generating_functions_symbolic(n_max, order));
           return;
         }
         for (const auto& pt : points(c, kGridLo, kGridHi)) append(out, sweep_generating_functions(pt, n_max, order));
       }},
      {"binomial_like",
       [](const RunConfig& c, auto& out) {
         if (c.mode == Mode::symbolic) {
           append(out, sweep_binomial_like_symbolic(bound_or(c, 7)));
           return;
         }
         for (const auto& pt : points(c, kGridLo, kGridHi)) append(out, sweep_binomial_like(pt, bound_or(c, 7)));
       }},
      {"orthogonality",
       [](const RunConfig& c, auto& out) {
         const long bound = bound_or(c, 8);
         for (const auto& pt : points(c, kGridLo, kGridHi)) out.push_back(sweep_orthogonality(pt, bound, bound));
       }},
      {"vandermonde",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kOracleGridLo, kOracleGridHi)) append(out, sweep_vandermonde(pt, bound_or(c, 5)));
       }},
      {"equal1",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) {
           if (pt.p != pt.q) out.push_back(sweep_equal1(pt, bound_or(c, 8)));
         }
       }},
      {"inversion",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) append(out, sweep_inversion(pt, bound_or(c, 7)));
       }},
      {"fibonomial",
       [](const RunConfig& c, auto& out) {
         for (long a : alphas(c, {1, 2})) out.push_back(fibonomial_suite(a, bound_or(c, 10)));
       }},
      {"gaussian",
       [](const RunConfig& c, auto& out) {
         const long n_max = bound_or(c, 6);
         for (std::int64_t q : gaussian_qs(c)) {
           // the closed alternating sum divides by q^j - 1
           if (q != 1 && q != -1) out.push_back(sweep_gaussian_explicit(q, n_max));
           out.push_back(sweep_gaussian_inversion(q, n_max));
           out.push_back(sweep_phi_basis(q, n_max));
         }
       }},
      {"pascal", [](const RunConfig& c, auto& out) { out.push_back(sweep_pascal(bound_or(c, 12))); }},
      {"scale_invariance",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kGridLo, kGridHi)) {
           out.push_back(sweep_scale_invariance(SeqParams(pt.p, pt.q), bound_or(c, 8)));
         }
       }},
  };
  return suites;
}

const std::vector<std::pair<std::string, Suite>>& oracle_suites() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"selections",
       [](const RunConfig& c, auto& out) {
         const auto budget = oracle::budget_from_env();
         for (const auto& pt : points(c, kOracleGridLo, kOracleGridHi)) {
           out.push_back(oracle::check_selections(SeqParams(pt.p, pt.q), bound_or(c, 8), 6, budget));
         }
       }},
      {"bipartite_multigraphs",
       [](const RunConfig& c, auto& out) {
         const auto budget = oracle::budget_from_env();
         for (long a : alphas(c, {1, 2, 3})) out.push_back(oracle::check_bipartite(a, bound_or(c, 5), budget));
       }},
      {"acyclic_routes",
       [](const RunConfig& c, auto& out) {
         const auto budget = oracle::budget_from_env();
         const std::vector<long> ps = c.p ? std::vector<long>{static_cast<long>(*c.p)} : std::vector<long>{2, 3};
         for (long p : ps) out.push_back(oracle::check_acyclic_routes(p, std::min(bound_or(c, 4), 4L), budget));
       }},
      {"inverse_relation",
       [](const RunConfig& c, auto& out) {
         const std::vector<long> ps = c.p ? std::vector<long>{static_cast<long>(*c.p)} : std::vector<long>{2, 3};
         for (long p : ps) out.push_back(oracle::verify_inverse_relation(p, bound_or(c, 8)));
       }},
      {"volume_ratio",
       [](const RunConfig& c, auto& out) {
         for (const auto& pt : points(c, kOracleGridLo, kOracleGridHi)) {
           out.push_back(oracle::check_volume_ratio(pt, bound_or(c, 8)));
         }
         if (!c.p && !c.q) {
           for (long a : alphas(c, {1, 2})) out.push_back(oracle::check_fibonacci_volume_ratio(a, bound_or(c, 10)));
         }
       }},
  };
  return suites;
}

std::vector<IdentityReport> run_suites(const std::vector<std::pair<std::string, Suite>>& suites,
                                       const RunConfig& config) {
  std::vector<IdentityReport> out;
  bool matched = false;
  for (const auto& [name, suite] : suites) {
    if (!config.identity || *config.identity == name) {
      suite(config, out);
      matched = true;
    }
  }
  if (!matched) {
    throw ParameterError("unknown identity suite: " + *config.identity);
  }
  return out;
}

std::string kind_name(ReportKind kind) { return kind == ReportKind::check ? "check" : "diagnostic"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') {
      out += '"';
    }
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) {
      line += ',';
    }
    line += csv_field(fields[i]);
  }
  return line + "\r\n";
}

std::string params_text(const IdentityReport& r) {
  std::string text;
  if (r.params) {
    text = r.params->str();
    if (r.params->scale != 1) {
      text += " scale=" + std::to_string(r.params->scale);
    }
  } else if (!r.alpha) {
    text = "symbolic";
  }
  if (r.alpha) {
    text += (text.empty() ? "" : " ") + std::string("alpha=") + std::to_string(*r.alpha);
  }
  return text;
}

BigInt coefficient(const RunConfig& c, long n, long k) {
  const SeqParams params(*c.p, *c.q, c.scale);
  const CoeffQuery query{params, n, k};
  switch (c.route) {
    case Route::recurrence:
      return coeff_recurrence(query);
    case Route::factorial:
      return coeff_factorial(query);
    case Route::product:
      return coeff_product(query);
    case Route::lambda_multiset:
      return coeff_lambda_multiset(params, n - k + 1, k);
    case Route::lambda_subset: {
      const BigInt weight = ipow(BigInt(params.p) * params.q, choose2(static_cast<std::uint64_t>(k)));
      if (weight == 0) {
        throw DegenerateParameters("subset form cannot be normalized when pq = 0");
      }
      return exact_div(coeff_lambda_subset(params, n, k), weight);
    }
    case Route::partial_fractions:
      return coeff_partial_fractions(params, n, k).to_integer();
    case Route::inverse:
      return coeff_inverse(query);
  }
  throw ParameterError("unknown route");
}

const std::map<std::string, Route>& route_names() {
  static const std::map<std::string, Route> names{
      {"recurrence", Route::recurrence},
      {"factorial", Route::factorial},
      {"product", Route::product},
      {"lambda_multiset", Route::lambda_multiset},
      {"lambda_subset", Route::lambda_subset},
      {"partial_fractions", Route::partial_fractions},
      {"inverse", Route::inverse},
  };
  return names;
}

std::string route_name(Route r) {
  for (const auto& [name, value] : route_names()) {
    if (value == r) {
      return name;
    }
  }
  return "unknown";
}

void require_point(const RunConfig& c) {
  if (!c.p || !c.q) {
    throw ParameterError("--p and --q are required in numeric mode");
  }
}

int run_coeff(const RunConfig& c, std::ostream& out) {
  if (!c.n || !c.k) {
    throw ParameterError("coeff needs --n and --k");
  }
  const long n = *c.n;
  const long k = *c.k;
  std::string value;
  Json record{{"n", std::to_string(n)}, {"k", std::to_string(k)}};
  if (c.mode == Mode::symbolic) {
    value = coeff_symbolic(n, k).str();
    record["route"] = "symbolic";
  } else {
    require_point(c);
    value = coefficient(c, n, k).str();
    record["p"] = std::to_string(*c.p);
    record["q"] = std::to_string(*c.q);
    record["scale"] = std::to_string(c.scale);
    record["route"] = route_name(c.route);
  }
  record["value"] = value;
  switch (c.format) {
    case OutputFormat::plain:
      out << value << '\n';
      break;
    case OutputFormat::csv:
      out << csv_row({"n", "k", "p", "q", "value"});
      out << csv_row({std::to_string(n), std::to_string(k), c.p ? std::to_string(*c.p) : "",
                      c.q ? std::to_string(*c.q) : "", value});
      break;
    case OutputFormat::json:
      out << record.dump(2) << '\n';
      break;
  }
  return kExitPass;
}

int run_table(const RunConfig& c, std::ostream& out) {
  if (!c.n_max || *c.n_max < 0) {
    throw ParameterError("table needs --max >= 0");
  }
  const long n_max = *c.n_max;
  std::vector<std::vector<std::string>> rows;
  if (c.mode == Mode::symbolic) {
    for (const auto& row : tnomial_triangle(BiPoly::p(), BiPoly::q(), n_max)) {
      rows.emplace_back();
      for (const auto& v : row) rows.back().push_back(v.str());
    }
  } else {
    require_point(c);
    for (const auto& row : tnomial_triangle(BigInt(*c.p), BigInt(*c.q), n_max)) {
      rows.emplace_back();
      for (const auto& v : row) rows.back().push_back(v.str());
    }
  }
  const std::string p_text = c.mode == Mode::symbolic ? "" : std::to_string(*c.p);
  const std::string q_text = c.mode == Mode::symbolic ? "" : std::to_string(*c.q);
  switch (c.format) {
    case OutputFormat::plain:
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          out << (k == 0 ? "" : c.mode == Mode::symbolic ? " ; " : " ") << row[k];
        }
        out << '\n';
      }
      break;
    case OutputFormat::csv:
      out << csv_row({"n", "k", "p", "q", "value"});
      for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t k = 0; k < rows[n].size(); ++k) {
          out << csv_row({std::to_string(n), std::to_string(k), p_text, q_text, rows[n][k]});
        }
      }
      break;
    case OutputFormat::json: {
      Json entries = Json::array();
      for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t k = 0; k < rows[n].size(); ++k) {
          entries.push_back({{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"value", rows[n][k]}});
        }
      }
      Json doc{{"entries", entries}, {"mode", c.mode == Mode::symbolic ? "symbolic" : "numeric"}};
      if (c.mode == Mode::numeric) {
        doc["p"] = p_text;
        doc["q"] = q_text;
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitPass;
}

int emit_reports(const RunConfig& c, const std::vector<IdentityReport>& reports, std::ostream& out) {
  switch (c.format) {
    case OutputFormat::plain:
      out << reports_plain(reports);
      break;
    case OutputFormat::csv:
      out << reports_csv(reports);
      break;
    case OutputFormat::json:
      out << reports_json(reports);
      break;
  }
  const bool failed =
      std::any_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.counts_as_failure(); });
  return failed ? kExitFailure : kExitPass;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : verify_suites()) out.push_back(entry.first);
    for (const auto& entry : oracle_suites()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::vector<IdentityReport> run_verify(const RunConfig& config) { return run_suites(verify_suites(), config); }
std::vector<IdentityReport> run_oracle(const RunConfig& config) { return run_suites(oracle_suites(), config); }

std::string reports_plain(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  std::size_t failures = 0;
  std::size_t diagnostics = 0;
  for (const auto& r : reports) {
    std::string status;
    if (r.kind == ReportKind::diagnostic) {
      ++diagnostics;
      status = r.holds() ? "NOTE holds" : "NOTE fails";
    } else {
      status = r.holds() ? "PASS" : "FAIL";
      failures += r.holds() ? 0 : 1;
    }
    out << status << ' ' << identity_name(r.id) << " [" << params_text(r) << "] n<=" << r.n_max << " k<=" << r.k_max;
    if (r.counterexample) {
      const auto& m = *r.counterexample;
      out << " first counterexample n=" << m.n << " k=" << m.k;
      if (!m.detail.empty()) {
        out << " (" << m.detail << ")";
      }
      out << ": " << m.lhs << " != " << m.rhs;
    }
    out << '\n';
  }
  out << reports.size() << " reports, " << failures << " failing, " << diagnostics << " diagnostic\n";
  return out.str();
}

std::string reports_csv(const std::vector<IdentityReport>& reports) {
  std::string out =
      csv_row({"id", "kind", "p", "q", "scale", "alpha", "n_max", "k_max", "status", "n", "k", "lhs", "rhs", "detail"});
  for (const auto& r : reports) {
    std::vector<std::string> row{std::string(identity_name(r.id)), kind_name(r.kind)};
    if (r.params) {
      row.push_back(std::to_string(r.params->p));
      row.push_back(std::to_string(r.params->q));
      row.push_back(std::to_string(r.params->scale));
    } else {
      row.insert(row.end(), {"", "", ""});
    }
    row.push_back(r.alpha ? std::to_string(*r.alpha) : "");
    row.push_back(std::to_string(r.n_max));
    row.push_back(std::to_string(r.k_max));
    row.push_back(r.holds() ? "holds" : "fails");
    if (r.counterexample) {
      const auto& m = *r.counterexample;
      row.insert(row.end(), {std::to_string(m.n), std::to_string(m.k), m.lhs, m.rhs, m.detail});
    } else {
      row.insert(row.end(), {"", "", "", "", ""});
    }
    out += csv_row(row);
  }
  return out;
}

std::string reports_json(const std::vector<IdentityReport>& reports) {
  Json list = Json::array();
  std::size_t failures = 0;
  std::size_t diagnostics = 0;
  for (const auto& r : reports) {
    Json item{{"id", std::string(identity_name(r.id))},
              {"kind", kind_name(r.kind)},
              {"n_max", std::to_string(r.n_max)},
              {"k_max", std::to_string(r.k_max)},
              {"status", r.holds() ? "holds" : "fails"},
              {"params", nullptr},
              {"alpha", nullptr},
              {"counterexample", nullptr}};
    if (r.params) {
      item["params"] = {{"p", std::to_string(r.params->p)},
                        {"q", std::to_string(r.params->q)},
                        {"scale", std::to_string(r.params->scale)}};
    }
    if (r.alpha) {
      item["alpha"] = std::to_string(*r.alpha);
    }
    if (r.counterexample) {
      const auto& m = *r.counterexample;
      item["counterexample"] = {{"n", std::to_string(m.n)},
                                {"k", std::to_string(m.k)},
                                {"lhs", m.lhs},
                                {"rhs", m.rhs},
                                {"detail", m.detail}};
    }
    failures += r.counts_as_failure() ? 1 : 0;
    diagnostics += r.kind == ReportKind::diagnostic ? 1 : 0;
    list.push_back(std::move(item));
  }
  Json doc{{"reports", list},
           {"summary",
            {{"reports", std::to_string(reports.size())},
             {"failing", std::to_string(failures)},
             {"diagnostic", std::to_string(diagnostics)}}}};
  return doc.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::coeff:
        return run_coeff(config, out);
      case Command::table:
        return run_table(config, out);
      case Command::verify:
        return emit_reports(config, run_verify(config), out);
      case Command::oracle:
        return emit_reports(config, run_oracle(config), out);
    }
  } catch (const IdentityViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    // parameter, degeneracy, divisibility and budget errors all reject the input
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact T-nomial coefficients, identity suites and enumeration oracles"};
  app.require_subcommand(1);
  RunConfig config;

  const std::map<std::string, Mode> modes{{"numeric", Mode::numeric}, {"symbolic", Mode::symbolic}};
  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::plain}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

  auto common = [&](CLI::App* sub, bool with_nk, bool with_suite) {
    sub->add_option("--p", config.p, "parameter p");
    sub->add_option("--q", config.q, "parameter q");
    sub->add_option("--max", config.n_max, "largest n");
    sub->add_option("--mode", config.mode, "numeric or symbolic")->transform(CLI::CheckedTransformer(modes));
    sub->add_option("--format", config.format, "plain, csv or json")->transform(CLI::CheckedTransformer(formats));
    if (with_nk) {
      sub->add_option("--n", config.n, "row index")->check(CLI::NonNegativeNumber);
      sub->add_option("--k", config.k, "column index")->check(CLI::NonNegativeNumber);
      sub->add_option("--scale", config.scale, "positive sequence scale")->check(CLI::PositiveNumber);
      sub->add_option("--route", config.route, "computation route")
          ->transform(CLI::CheckedTransformer(route_names()));
    }
    if (with_suite) {
      sub->add_option("--identity", config.identity, "suite name (default: all)");
      sub->add_option("--alpha", config.alpha, "alpha of the Fibonacci family or multigraphs")
          ->check(CLI::PositiveNumber);
      sub->add_option("--seed", config.seed, "sample grid points with this seed");
      sub->add_option("--samples", config.samples, "grid points to sample")->check(CLI::PositiveNumber);
    }
  };

  auto* coeff = app.add_subcommand("coeff", "print one coefficient");
  common(coeff, true, false);
  auto* table = app.add_subcommand("table", "print rows 0..max of the triangle");
  common(table, false, false);
  auto* verify = app.add_subcommand("verify", "run identity suites");
  common(verify, false, true);
  auto* oracle = app.add_subcommand("oracle", "run enumeration cross-checks");
  common(oracle, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (coeff->parsed()) {
    config.command = Command::coeff;
  } else if (table->parsed()) {
    config.command = Command::table;
  } else if (verify->parsed()) {
    config.command = Command::verify;
  } else {
    config.command = Command::oracle;
  }
  return run(config, out, err);
}

}  // namespace tnomial::cli
