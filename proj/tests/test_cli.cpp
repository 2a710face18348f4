#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "ampass/rational.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(AMPASS_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

using ordered_json = nlohmann::ordered_json;

}  // namespace

TEST_CASE("dist plain output", "[cli]") {
  const auto res = run_cli("dist --n 3 --k 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("p[0] = 1/3") != std::string::npos);
  CHECK(res.output.find("p[1] = 0") != std::string::npos);
  CHECK(res.output.find("p[2] = 1/2") != std::string::npos);
  CHECK(res.output.find("p[3] = 1/6") != std::string::npos);
}

TEST_CASE("dist csv output", "[cli]") {
  const auto res = run_cli("dist --n 2 --k 1 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "r,probability\n0,1/2\n1,0\n2,1/2\n");
}

TEST_CASE("json envelope round-trips byte-identically", "[cli]") {
  const auto res = run_cli("dist --n 4 --k 2 --format json");
  CHECK(res.exit_code == 0);
  const ordered_json parsed = ordered_json::parse(res.output);
  CHECK(parsed["command"] == "dist");
  CHECK(parsed["params"]["n"] == 4);
  CHECK(parsed["results"]["probabilities"].size() == 5);
  // canonical re-serialization reproduces the emitted bytes
  CHECK(parsed.dump(2) + "\n" == res.output);
  // exact values survive the round trip unchanged
  for (const auto& p : parsed["results"]["probabilities"]) {
    const auto r = ampass::Rational::parse(p.get<std::string>());
    CHECK(r.to_string() == p.get<std::string>());
  }
}

TEST_CASE("moments reproduce reference values", "[cli]") {
  const auto central = run_cli("moments --n 10 --k 2 --lmax 3 --kind central --format json");
  CHECK(central.exit_code == 0);
  const ordered_json cj = ordered_json::parse(central.output);
  CHECK(cj["results"]["values"][3] == "-702653939/1000188000");
  CHECK(cj["checks"][0]["passed"] == true);
  const auto raw = run_cli("moments --n 10 --k 2 --lmax 1 --kind raw --format json");
  CHECK(ordered_json::parse(raw.output)["results"]["values"][1] == "5869/1260");
  const auto m2 = run_cli("moments --n 2 --k 1 --lmax 2 --kind central --format json");
  CHECK(ordered_json::parse(m2.output)["results"]["values"][2] == "1");
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run_cli("dist --n 1 --k 1", true).exit_code == 2);
  CHECK(run_cli("dist --n 5 --k 9", true).exit_code == 2);
  CHECK(run_cli("dist --n 5", true).exit_code == 2);          // missing required
  CHECK(run_cli("unknown-subcommand", true).exit_code == 2);
  CHECK(run_cli("limits --k 1 --l 4 --samples abc", true).exit_code == 2);
}

TEST_CASE("guard errors exit with code 3 and point at limits", "[cli]") {
  const auto res = run_cli("moments --n 3000 --k 2 --lmax 2", true);
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("limits") != std::string::npos);
}

TEST_CASE("verify suite runs and exits zero", "[cli]") {
  const auto res = run_cli("verify --suite oracle --n-max 6 --workers 2 --format json");
  CHECK(res.exit_code == 0);
  const ordered_json j = ordered_json::parse(res.output);
  CHECK(j["results"]["all_passed"] == true);
  CHECK(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("limits emits samples and the claimed target", "[cli]") {
  const auto res = run_cli("limits --k 1 --l 2 --samples 1e4,1e5 --format json");
  CHECK(res.exit_code == 0);
  const ordered_json j = ordered_json::parse(res.output);
  CHECK(j["results"]["samples"].size() == 2);
  CHECK(j["results"]["claimed"] == "1");
  CHECK(j["results"]["precision_bits"] == 128);
  CHECK(j["results"]["extrapolated"] == "1");
}

TEST_CASE("simulate is reproducible through the CLI", "[cli]") {
  const std::string args = "simulate --n 8 --k 2 --trials 1e4 --seed 7 --workers 2 --format json";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const ordered_json j = ordered_json::parse(a.output);
  CHECK(j["results"]["histogram"][1] == 0);
}

TEST_CASE("bench emits the per-step table", "[cli]") {
  const auto res = run_cli("bench --lmax 3 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("l,step1_s,step2_s,step3_s,total_s,size_bytes") == 0);
  int rows = 0;
  for (const char c : res.output)
    if (c == '\n') ++rows;
  CHECK(rows == 4);  // header + 3 data rows
}

TEST_CASE("config file supplies defaults, flags win", "[cli]") {
  const std::string path = "/tmp/ampass_test_config.ini";
  {
    std::ofstream out(path);
    out << "format=csv\n";
  }
  const auto csv = run_cli("dist --n 2 --k 1 --config " + path);
  CHECK(csv.output.find("r,probability") == 0);
  const auto plain = run_cli("dist --n 2 --k 1 --config " + path + " --format plain");
  CHECK(plain.output.find("wrong-seat distribution") != std::string::npos);
}
