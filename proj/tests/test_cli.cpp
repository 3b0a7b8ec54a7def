#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "e7tensor/coset72.hpp"

#ifndef E7TENSOR_CLI_PATH
#define E7TENSOR_CLI_PATH ""
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd = std::string(E7TENSOR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

using json = nlohmann::json;

}  // namespace

TEST_CASE("cli dim") {
  auto r = run_cli("dim --algebra a7 --w 1,0,0,0,0,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "8\n");

  r = run_cli("dim --algebra e7 --w 0,0,1,0,0,0,0 --output json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["dim"] == 27664);
  CHECK(j["weight"] == json::array({0, 0, 1, 0, 0, 0, 0}));
}

TEST_CASE("cli usage errors exit with 1") {
  CHECK(run_cli("dim --algebra a7 --w 1,0").exit_code == 1);
  CHECK(run_cli("dim --algebra q9 --w 1").exit_code == 1);
  CHECK(run_cli("dim").exit_code == 1);
  CHECK(run_cli("tensor --algebra a2 --w 1,0").exit_code == 1);
  CHECK(run_cli("nosuchcommand").exit_code == 1);
}

TEST_CASE("cli orbit72") {
  auto r = run_cli("orbit72 --algebra e7 --w 1,1,2,2,1,1,1 --output json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 72);
  CHECK(j["rows"][0]["s"] == 1);
  CHECK(j["rows"][0]["sign"] == 1);
  CHECK(j["rows"][0]["weight"] == json::array({1, 1, 11, 1, 1, 2, 1}));
  CHECK(j["rows"][71]["weight"] == json::array({1, 1, 2, 2, 1, 1, 16}));
  CHECK(run_cli("orbit72 --algebra a7 --w 1,1,1,1,1,1,1").exit_code == 1);
}

TEST_CASE("cli subdom lists the 39 proper subdominants") {
  auto r = run_cli("subdom --algebra e7 --w 0,0,1,1,0,0,0 --output json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 39);
}

TEST_CASE("cli char json is stable across runs") {
  const std::string cmd = "char --algebra a7 --w 1,0,0,0,0,0,0 --seed 4 --output json";
  auto r1 = run_cli(cmd);
  auto r2 = run_cli(cmd);
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  const json j = json::parse(r1.out);
  CHECK(j["backend"] == "rational");

  auto rp = run_cli("char --algebra e7 --w 1,0,0,0,0,0,0 --backend poly1 --output json");
  REQUIRE(rp.exit_code == 0);
  const json jp = json::parse(rp.out);
  // (357 + 129205 x + 257040 x^2) / (144 x)
  CHECK(jp["value"]["num"] == json::array({"119/48", "129205/144", "1785"}));
  CHECK(jp["value"]["den"] == json::array({"0", "1"}));
}

TEST_CASE("cli tensor on a small product") {
  auto r = run_cli("tensor --algebra a2 --w 1,0 --w2 0,1 --output json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lhs"] == json::array({json::array({1, 0}), json::array({0, 1})}));
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["weight"] == json::array({1, 1}));
  CHECK(j["entries"][0]["mult"] == 1);
  CHECK(j["entries"][1]["weight"] == json::array({0, 0}));
  CHECK(j["dim_check"]["lhs"] == 9);
  CHECK(j["dim_check"]["rhs"] == 9);
  CHECK(j["provenance"]["backend"] == "rational");
  CHECK(j["provenance"]["verify_trials"] == 3);

  // identical seeds give identical output
  auto r2 = run_cli("tensor --algebra a2 --w 1,0 --w2 0,1 --output json");
  CHECK(r.out == r2.out);
}

TEST_CASE("cli validate") {
  auto r = run_cli("validate");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  // pristine external file passes
  const std::string good = std::string(E7TENSOR_DATA_DIR) + "/coset_words_e7a7.txt";
  CHECK(run_cli("validate --words-file " + good).exit_code == 0);

  // corrupted file: swap two entries of the table
  std::string text{e7tensor::coset_words_text()};
  const auto pos = text.find("3 +1 3 4");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 8, "3 +1 3 2");  // duplicates entry 2
  const std::string bad_path = "/tmp/e7tensor_corrupt_words.txt";
  {
    std::ofstream out(bad_path);
    out << text;
  }
  CHECK(run_cli("validate --words-file " + bad_path).exit_code == 2);
  std::remove(bad_path.c_str());
}
