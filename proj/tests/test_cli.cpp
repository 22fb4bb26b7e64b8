#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CASIMIR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("spectrum json payload") {
  auto r = run_cli("spectrum --hbar 1 --kappa 1 --omega 1 --p-max 1 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["schema"] == "casimir-spectra/1");
  REQUIRE(j["params"]["kappa"] == "1");
  REQUIRE(j["params"]["lambda"] == "-1");
  REQUIRE(j["params"]["omega_sq"] == "1");
  REQUIRE(j["lines"].is_array());
  REQUIRE_FALSE(j["lines"].empty());
  // the printed ground-state energy appears among the lines
  bool found = false;
  for (const auto& l : j["lines"]) {
    if (l["p"] == 0 && l["flags"]["matches_closed_form"] == true &&
        std::abs(l["E"].get<double>() + 0.61803398874989479) < 1e-15)
      found = true;
  }
  REQUIRE(found);
}

TEST_CASE("byte-identical output for identical configuration") {
  std::string args = "spectrum --hbar 1 --kappa -1 --omega-sq 2 --p-max 2";
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE_FALSE(a.out.empty());
}

TEST_CASE("omega and omega-sq are equivalent spellings") {
  auto a = run_cli("spectrum --kappa 1 --omega 2 --p-max 1");
  auto b = run_cli("spectrum --kappa 1 --omega-sq 4 --p-max 1");
  REQUIRE(a.out == b.out);
}

TEST_CASE("invalid input exits with 2") {
  REQUIRE(run_cli("spectrum --kappa 1 --omega 1 --p-max -1").exit_code == 2);
  REQUIRE(run_cli("spectrum --kappa 1 --lambda 1 --omega 1").exit_code == 2);
  REQUIRE(run_cli("spectrum --omega 1").exit_code == 2);
  REQUIRE(run_cli("no-such-command").exit_code == 2);
  REQUIRE(run_cli("verify-classical --lambda 1 --omega 0").exit_code == 2);
}

TEST_CASE("invariant violation exits with 1") {
  auto r = run_cli("verify-classical --lambda 1 --omega 1 --points 10 --seed 3 --tol 1e-20");
  REQUIRE(r.exit_code == 1);
  json j = json::parse(r.out);
  REQUIRE(j["residuals"]["pass"] == false);
}

TEST_CASE("verify-identity reports the resolved sign") {
  auto r = run_cli("verify-identity --kappa 1 --omega 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["identity"]["consistent"] == true);
  REQUIRE(j["identity"]["resolved_quartic_sign"] == "minus");
  REQUIRE(j["identity"]["built_vs_factorized"]["ratio"] == "1");
}

TEST_CASE("ladder carries amplitudes") {
  auto r = run_cli("ladder --kappa 1 --omega 1 --p-max 1 --branch u1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  bool ok = false;
  for (const auto& l : j["lines"]) {
    REQUIRE(l["u_branch"] == "u1");
    if (l["p"] == 1 && !l["amplitudes"].empty()) {
      double a = l["amplitudes"][0].get<double>();
      double phi = l["phi"][0].get<double>();
      REQUIRE(std::abs(a * a - phi) < 1e-4);
      ok = true;
    }
  }
  REQUIRE(ok);
}

TEST_CASE("oracle command emits eigenvalues") {
  auto r = run_cli("oracle --lambda 0 --omega 1 --n-r 128 --m-max 2 --k 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["eigenvalues"].is_array());
  REQUIRE(std::abs(j["eigenvalues"][0]["E"].get<double>() - 1.0) < 0.01);
}

TEST_CASE("csv format and out file") {
  auto r = run_cli("spectrum --kappa 1 --omega 1 --p-max 0 --format csv");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.rfind("p,u_branch,u,E", 0) == 0);

  std::string path = "cli_test_out.json";
  auto w = run_cli("spectrum --kappa 1 --omega 1 --p-max 0 --out " + path);
  REQUIRE(w.exit_code == 0);
  REQUIRE(w.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  json j = json::parse(f);
  REQUIRE(j["schema"] == "casimir-spectra/1");
  std::remove(path.c_str());
}

TEST_CASE("numbers carry round-trip precision") {
  auto r = run_cli("spectrum --kappa 1 --omega 1 --p-max 0");
  json j = json::parse(r.out);
  // the serialized energy reproduces the exact value to the last ulp, and the
  // raw text carries 17 significant digits
  REQUIRE(r.out.find("-0.61803398874989479") != std::string::npos);
  bool checked = false;
  for (const auto& l : j["lines"]) {
    if (l["E_exact"] == "1/2 - 1/2*sqrt(5)") {
      double e = l["E"].get<double>();
      REQUIRE(std::abs(e - (0.5 - std::sqrt(5.0) / 2.0)) < 3e-16);
      checked = true;
    }
  }
  REQUIRE(checked);
}
