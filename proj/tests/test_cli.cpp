// End-to-end checks of the loglog-lab binary: exit-code contract, report
// formats, parameter parsing, environment override. The binary path comes in
// via LOGLAB_CLI_PATH from the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "loglab/report.hpp"

namespace {

struct RunOutput {
  int exit_code;
  std::string stdout_text;
};

RunOutput run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(LOGLAB_CLI_PATH) + " " + args +
                          " 2>/tmp/loglab_cli_stderr.txt";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string stderr_text() {
  std::ifstream in("/tmp/loglab_cli_stderr.txt");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("verify exits 0 and reports abs_error_qc") {
  auto r = run("verify --id GR-4.325.1 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("results").size() == 1);
  CHECK(j.at("results")[0].at("abs_error_qc").get<double>() <= 1e-9);
  CHECK(j.at("results")[0].at("verdict") == "pass");
  CHECK(j.at("summary").at("pass") == 1);
}

TEST_CASE("out-of-domain parameter exits 2 and quotes the interval") {
  auto r = run("verify --id GR-4.325.7 --param t=4.0");
  CHECK(r.exit_code == 2);
  CHECK(stderr_text().find("(-pi, pi)") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify").exit_code == 2);                       // missing --id
  CHECK(run("frobnicate").exit_code == 2);                   // unknown subcommand
  CHECK(run("verify --id GR-4.325.8 --param mu=xyz").exit_code == 2);
  CHECK(run("verify --id GR-4.325.1 --max-level 42").exit_code == 2);
  CHECK(run("verify --id no-such-id").exit_code == 2);
}

TEST_CASE("injected failure exits 1, not 0") {
  auto r = run("verify --id GR-4.325.1 --threshold 1e-15 --format json");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("results")[0].at("verdict") == "fail");
  CHECK(j.at("summary").at("fail") == 1);
}

TEST_CASE("full matrix in markdown") {
  auto r = run("all --format markdown");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("| id | params | lhs | rhs |") != std::string::npos);
  CHECK(r.stdout_text.find("GR-4.325.10") != std::string::npos);
  CHECK(r.stdout_text.find(" fail=0 ") != std::string::npos);
}

TEST_CASE("list shows all 13 identities") {
  auto r = run("list --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.size() == 13);
  CHECK(j[0].at("id") == "GR-4.229.7");
}

TEST_CASE("sweep with explicit and default grids") {
  auto r = run("sweep --id GR-4.325.7 --param t=0.5 --param t=-0.5 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("results").size() == 2);

  r = run("sweep --id GR-4.325.11 --format json");
  CHECK(r.exit_code == 0);
  j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("results").size() == 4);

  CHECK(run("sweep --id GR-4.325.7 --param t=0.5 --param mu=1").exit_code == 2);
}

TEST_CASE("complex parameters parse as a+bi") {
  auto r = run("verify --id GR-4.325.8 --param mu=3+2i --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("results")[0].at("params").at("mu").at("re").get<double>() == 3.0);
  CHECK(j.at("results")[0].at("params").at("mu").at("im").get<double>() == 2.0);
  CHECK(run("verify --id GR-4.325.8 --param mu=1-1i").exit_code == 0);
  CHECK(run("verify --id GR-4.325.8 --param mu=2.5").exit_code == 0);
}

TEST_CASE("report file output is atomic") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "loglab_cli_test";
  fs::create_directories(dir);
  const fs::path target = dir / "report.json";
  auto r = run("verify --id GR-4.325.3 --format json -o " + target.string());
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.empty());
  CHECK(fs::exists(target));
  CHECK(!fs::exists(target.string() + ".tmp"));
  std::ifstream in(target);
  const std::string contents{std::istreambuf_iterator<char>(in),
                             std::istreambuf_iterator<char>()};
  CHECK_NOTHROW(loglab::from_json(contents));
  fs::remove_all(dir);
}

TEST_CASE("environment variable overrides max_level") {
  // level 3 is too coarse for GR-4.325.10: fail-with-cause, exit 1
  auto r = run("verify --id GR-4.325.10 --format json", "LOGLOG_LAB_MAX_LEVEL=3");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("run_config").at("max_level") == 3);
  CHECK(j.at("results")[0].at("verdict") == "fail");
  // invalid values are usage errors
  CHECK(run("verify --id GR-4.325.1", "LOGLOG_LAB_MAX_LEVEL=abc").exit_code == 2);
  CHECK(run("verify --id GR-4.325.1", "LOGLOG_LAB_MAX_LEVEL=99").exit_code == 2);
  // an explicit flag wins over the environment
  r = run("verify --id GR-4.325.10 --max-level 10 --format json", "LOGLOG_LAB_MAX_LEVEL=3");
  CHECK(r.exit_code == 0);
}
