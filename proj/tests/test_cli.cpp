#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "tnomial/cli.hpp"

using namespace tnomial;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tnomial");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeff command") {
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "4", "--k", "2"}).out == "247\n");
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "4", "--k", "2", "--route", "factorial"}).out == "247\n");
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "4", "--k", "2", "--route", "partial_fractions"}).out ==
        "247\n");
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "4", "--k", "2", "--route", "lambda_subset"}).out == "247\n");
  CHECK(invoke({"coeff", "--p", "2", "--q", "2", "--n", "4", "--k", "0", "--route", "inverse"}).out == "543\n");
  CHECK(invoke({"coeff", "--n", "4", "--k", "2", "--mode", "symbolic"}).out ==
        "p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4\n");
  const auto json = invoke({"coeff", "--p", "2", "--q", "3", "--n", "4", "--k", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["value"] == "247");
  CHECK(doc["route"] == "recurrence");
}

TEST_CASE("table command") {
  CHECK(invoke({"table", "--p", "1", "--q", "1", "--max", "4"}).out == "1\n1 1\n1 2 1\n1 3 3 1\n1 4 6 4 1\n");
  const auto csv = invoke({"table", "--p", "2", "--q", "3", "--max", "2", "--format", "csv"});
  CHECK(csv.out ==
        "n,k,p,q,value\r\n0,0,2,3,1\r\n1,0,2,3,1\r\n1,1,2,3,1\r\n2,0,2,3,1\r\n2,1,2,3,5\r\n2,2,2,3,1\r\n");
  const auto sym = invoke({"table", "--max", "2", "--mode", "symbolic"});
  CHECK(sym.out == "1\n1 ; 1\n1 ; p + q ; 1\n");
}

TEST_CASE("usage errors use their own exit status") {
  CHECK(invoke({}).status == cli::kExitUsage);
  CHECK(invoke({"coeff", "--bogus"}).status == cli::kExitUsage);
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "2"}).status == cli::kExitUsage);
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "2", "--k", "3"}).status == cli::kExitUsage);
  CHECK(invoke({"coeff", "--p", "2", "--q", "3", "--n", "2", "--k", "1", "--route", "nope"}).status ==
        cli::kExitUsage);
  CHECK(invoke({"coeff", "--p", "1", "--q", "-1", "--n", "4", "--k", "2", "--route", "factorial"}).status ==
        cli::kExitUsage);
  CHECK(invoke({"table", "--p", "1"}).status == cli::kExitUsage);
  CHECK(invoke({"verify", "--identity", "no_such_suite"}).status == cli::kExitUsage);
  CHECK(invoke({"verify", "--identity", "pascal", "--format", "xml"}).status == cli::kExitUsage);
  CHECK(invoke({"coeff", "--help"}).status == cli::kExitPass);
}

TEST_CASE("verify vandermonde at a point") {
  const auto r = invoke({"verify", "--identity", "vandermonde", "--p", "2", "--q", "3", "--max", "6"});
  CHECK(r.status == cli::kExitPass);
  CHECK(r.out.find("PASS vandermonde_proof [p=2 q=3]") != std::string::npos);
  CHECK(r.out.find("NOTE fails vandermonde_statement [p=2 q=3]") != std::string::npos);
  CHECK(r.out.find("2 reports, 0 failing, 1 diagnostic") != std::string::npos);
}

TEST_CASE("json reports round-trip byte for byte") {
  for (const char* suite : {"vandermonde", "fibonomial", "inversion", "equal1"}) {
    const auto r = invoke({"verify", "--identity", suite, "--format", "json", "--max", "4"});
    CHECK(r.status == cli::kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    for (const auto& rep : doc["reports"]) {
      CHECK(rep["n_max"].is_string());
      if (!rep["counterexample"].is_null()) {
        CHECK(rep["counterexample"]["lhs"].is_string());
      }
    }
  }
  const auto o = invoke({"oracle", "--identity", "acyclic_routes", "--format", "json"});
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc.dump(2) + "\n" == o.out);
  CHECK(doc["summary"]["failing"] == "0");
}

TEST_CASE("exit status tracks failing checks only") {
  std::vector<IdentityReport> reports(2);
  reports[0].id = IdentityId::pascal;
  reports[1].id = IdentityId::vandermonde_statement;
  reports[1].kind = ReportKind::diagnostic;
  reports[1].counterexample = Mismatch{0, 0, "2", "1", "m=1"};
  const auto plain = cli::reports_plain(reports);
  CHECK(plain.find("0 failing, 1 diagnostic") != std::string::npos);
  reports[0].counterexample = Mismatch{3, 1, "4", "3", "a, \"quoted\" detail"};
  const auto csv = cli::reports_csv(reports);
  CHECK(csv.find("\"a, \"\"quoted\"\" detail\"") != std::string::npos);
  const auto doc = nlohmann::json::parse(cli::reports_json(reports));
  CHECK(doc["summary"]["failing"] == "1");
}

TEST_CASE("sampled grids are deterministic") {
  const std::vector<std::string> args{"verify", "--identity", "complementation", "--seed", "7", "--samples", "5"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("5 reports, 0 failing") != std::string::npos);
}

TEST_CASE("oracle command") {
  const auto r = invoke({"oracle", "--identity", "bipartite_multigraphs", "--alpha", "2", "--max", "4"});
  CHECK(r.status == cli::kExitPass);
  CHECK(r.out.find("PASS bipartite_multigraphs") != std::string::npos);
  CHECK(invoke({"oracle", "--identity", "inverse_relation", "--p", "2", "--max", "9"}).status == cli::kExitUsage);
}
