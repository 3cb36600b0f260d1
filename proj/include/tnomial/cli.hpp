#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tnomial/report.hpp"

namespace tnomial::cli {

enum class Command { coeff, table, verify, oracle };
enum class Mode { numeric, symbolic };
enum class OutputFormat { plain, csv, json };
enum class Route { recurrence, factorial, product, lambda_multiset, lambda_subset, partial_fractions, inverse };

/// Exit statuses of `run`.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::coeff;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::int64_t scale = 1;
  std::optional<long> alpha;
  std::optional<long> n;
  std::optional<long> k;
  /// Upper bound on n for table, verify and oracle.
  std::optional<long> n_max;
  Mode mode = Mode::numeric;
  /// A suite name from suite_names(); every suite when empty.
  std::optional<std::string> identity;
  OutputFormat format = OutputFormat::plain;
  Route route = Route::recurrence;
  /// With a seed, verify/oracle run on `samples` grid points drawn from the
  /// default grid instead of the whole grid.
  std::optional<std::uint64_t> seed;
  std::size_t samples = 8;
};

/// Names accepted by --identity.
const std::vector<std::string>& suite_names();

/// Runs the identity suites selected by `config`. ParameterError on an
/// unknown suite name.
std::vector<IdentityReport> run_verify(const RunConfig& config);
/// Runs the enumeration cross-checks selected by `config`.
std::vector<IdentityReport> run_oracle(const RunConfig& config);

std::string reports_plain(const std::vector<IdentityReport>& reports);
std::string reports_csv(const std::vector<IdentityReport>& reports);
/// Canonical JSON: sorted keys, two-space indent, every number a string.
std::string reports_json(const std::vector<IdentityReport>& reports);

/// Executes a parsed configuration. Returns kExitPass, kExitFailure when a
/// check fails, or kExitUsage when the inputs are rejected.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tnomial::cli
