#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(PARRY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("generate writes the word file and prints counts") {
  std::string path = "/tmp/parry_cli_word.txt";
  CmdResult res = run_cli("generate --p 2 --q 1 --length 8 --out " + path);
  CHECK(res.status == 0);
  CHECK(res.out.find("length=8") != std::string::npos);
  CHECK(res.out.find("count0=5") != std::string::npos);
  CHECK(res.out.find("count1=3") != std::string::npos);
  CHECK(slurp(path) == "00100101\n");

  SECTION("round trip through powers --in") {
    CmdResult analyzed = run_cli("powers --in " + path);
    CHECK(analyzed.status == 0);
    CHECK(analyzed.out.find("k=2") != std::string::npos);
  }
}

TEST_CASE("generate rejects a zero length") {
  CmdResult res = run_cli("generate --p 2 --q 1 --length 0 --out /tmp/parry_cli_zero.txt");
  CHECK(res.status != 0);
}

TEST_CASE("index of a witness word") {
  std::string json_path = "/tmp/parry_cli_wn.json";
  CmdResult res = run_cli("index --p 5 --q 1 --wn 2 --json " + json_path);
  REQUIRE(res.status == 0);
  auto report = nlohmann::json::parse(slurp(json_path));
  CHECK(report["params"]["p"] == 5);
  CHECK(report["results"]["index"]["num"] == "177");
  CHECK(report["results"]["index"]["den"] == "32");
  CHECK(std::string(report["results"]["brute_force"]).starts_with("confirmed"));
}

TEST_CASE("index of an explicit factor") {
  std::string json_path = "/tmp/parry_cli_factor.json";
  CmdResult res = run_cli("index --p 3 --q 1 --factor 0100 --json " + json_path);
  REQUIRE(res.status == 0);
  auto report = nlohmann::json::parse(slurp(json_path));
  CHECK(report["results"]["index"]["num"] == "15");
  CHECK(report["results"]["index"]["den"] == "4");
  CHECK(report["results"]["lower_bound_only"] == true);
}

TEST_CASE("index rejects non-factors") {
  CmdResult res = run_cli("index --p 2 --q 1 --factor 11");
  CHECK(res.status != 0);
  CHECK(res.out.find("not a factor") != std::string::npos);
}

TEST_CASE("powers reports the predicted bound") {
  CmdResult res = run_cli("powers --p 4 --q 1 --prefix-len 50000");
  CHECK(res.status == 0);
  CHECK(res.out.find("k=4") != std::string::npos);
  CHECK(res.out.find("predicted=4") != std::string::npos);
}

TEST_CASE("complexity profile") {
  std::string json_path = "/tmp/parry_cli_complexity.json";
  CmdResult res = run_cli("complexity --p 2 --q 1 --max-n 30 --json " + json_path);
  REQUIRE(res.status == 0);
  auto report = nlohmann::json::parse(slurp(json_path));
  CHECK(report["results"]["counts"][10] == 11);
  CHECK(report["results"]["sturmian"] == true);
}

TEST_CASE("bispecials listing") {
  CmdResult res = run_cli("bispecials --p 2 --q 1 --max-n 10");
  CHECK(res.status == 0);
  CHECK(res.out.find("(empty)") != std::string::npos);
  CHECK(res.out.find("010010") != std::string::npos);
}

TEST_CASE("sturmian-check rows all agree") {
  std::string csv_path = "/tmp/parry_cli_sturmian.csv";
  CmdResult res = run_cli("sturmian-check --p 2 --max-n 6 --csv " + csv_path);
  CHECK(res.status == 0);
  CHECK(res.out.find("NO") == std::string::npos);
  CHECK(res.out.find("supremum beta+1") != std::string::npos);
  std::string csv = slurp(csv_path);
  CHECK(csv.starts_with("n,q_2n,q_2n+1"));
  CHECK(res.status == 0);
}

TEST_CASE("sturmian-check rejects p < 2") {
  CmdResult res = run_cli("sturmian-check --p 1");
  CHECK(res.status != 0);
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  std::string a = "/tmp/parry_cli_det_a.json";
  std::string b = "/tmp/parry_cli_det_b.json";
  REQUIRE(run_cli("index --p 4 --q 1 --wn 3 --json " + a).status == 0);
  REQUIRE(run_cli("index --p 4 --q 1 --wn 3 --json " + b).status == 0);
  auto ja = nlohmann::ordered_json::parse(slurp(a));
  auto jb = nlohmann::ordered_json::parse(slurp(b));
  ja["provenance"].erase("timestamp");
  jb["provenance"].erase("timestamp");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("verify gates on its grid") {
  SECTION("small grid passes") {
    CmdResult res = run_cli("verify --grid 2");
    CHECK(res.status == 0);
    CHECK(res.out.find("[PASS] 1.") != std::string::npos);
    CHECK(res.out.find("all criteria passed") != std::string::npos);
  }
  SECTION("grid below 2 is a usage error") {
    CmdResult res = run_cli("verify --grid 1");
    CHECK(res.status != 0);
  }
  SECTION("an injected fault flips the exit code") {
    CmdResult res = run_cli("verify --grid 2 --inject-fault");
    CHECK(res.status != 0);
    CHECK(res.out.find("[FAIL]") != std::string::npos);
  }
}
