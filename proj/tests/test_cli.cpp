#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& input = "") {
  const auto dir = std::filesystem::temp_directory_path();
  std::string command = std::string(ADF_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!input.empty()) {
    const auto path = dir / "adf_cli_test_input.txt";
    std::ofstream(path) << input;
    command = "cat " + path.string() + " | " + command;
  }
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli: decisions map to exit codes") {
  const Run dn = cli("gen dn 6");
  CHECK(dn.status == 0);
  const Run no = cli("check adf -", dn.out);
  CHECK(no.status == 1);
  const auto j = nlohmann::json::parse(no.out);
  CHECK(j["decision"] == "no");
  CHECK(j["stats"]["total"] == "20");
  CHECK(j["stats"]["checked"] == 20);

  const Run yes = cli("check adhc -", cli("gen complete 4").out);
  CHECK(yes.status == 0);
  const auto y = nlohmann::json::parse(yes.out);
  CHECK(y["decision"] == "yes");
  CHECK(y["cycles"].size() == 1);
  CHECK(y["arc_directions"][0].size() == 4);
  CHECK(y["equipartition"]["X"].size() == 2);

  const Run unknown = cli("check adf - --strategy sampled --samples 10", cli("gen dn 10").out);
  CHECK(unknown.status == 2);
  CHECK(cli("check d2f -", "3\n0 1\n1 2\n2 0\n").status == 0);
  CHECK(cli("check d2f -", "3\n0 1\n1 2\n").status == 1);
}

TEST_CASE("cli: usage and input errors") {
  CHECK(cli("frobnicate").status == 64);
  CHECK(cli("check adf").status == 64);
  CHECK(cli("count threshold 1/4").status == 64);
  CHECK(cli("check adf /nonexistent/graph.txt").status == 65);
  CHECK(cli("check adf -", "3\n0 0\n").status == 65);
  CHECK(cli("check adf - --strategy exhaustive", cli("gen complete 26").out).status == 64);
}

TEST_CASE("cli: counting commands") {
  CHECK(cli("count threshold 24/46 --variant two_factor").out == "1420 < bound < 1421\n");
  CHECK(cli("count threshold 9/16 --variant hamilton").out == "177 < bound < 178\n");
  const auto r = nlohmann::json::parse(cli("count verify 48 22").out);
  CHECK(r["N"] == "32247603683100");
  CHECK(r["inequality3_holds"] == false);
  const Run scan = cli("count scan --nmax 50");
  CHECK(scan.out.rfind("n,delta,N,S,holds\n12,7,924,252,true\n", 0) == 0);
  CHECK(scan.out.find("44,23,2104098963720,45199691554996/21,false") != std::string::npos);
}

TEST_CASE("cli: outputs are identical across worker counts") {
  const std::string graph = cli("gen random 12 5 --seed 3").out;
  CHECK(cli("check adf - --jobs 1", graph).out == cli("check adf - --jobs 4", graph).out);
  CHECK(cli("census - --jobs 1", graph).out == cli("census - --jobs 3", graph).out);
  CHECK(cli("check adf - --strategy sampled --seed 7 --jobs 1", graph).out ==
        cli("check adf - --strategy sampled --seed 7 --jobs 2", graph).out);
  CHECK(cli("count scan --nmax 120 --jobs 1").out == cli("count scan --nmax 120 --jobs 3").out);
  CHECK(cli("gen random 12 5 --seed 3").out == graph);
  CHECK(cli("gen random 12 5 --seed 4").out != graph);
}

TEST_CASE("cli: census, reduction, generators and conjecture scan") {
  const auto c = nlohmann::json::parse(cli("census -", cli("gen complete 4").out).out);
  CHECK(c["good"] == 6);
  CHECK(c["total"] == "6");

  const Run petersen = cli("reduce 3ec - --cross-validate", cli("gen cubic petersen").out);
  CHECK(petersen.status == 1);
  const auto p = nlohmann::json::parse(petersen.out);
  CHECK(p["agree"] == true);
  CHECK(p["direct"]["colorable"] == false);
  const Run k33 = cli("reduce 3ec - --cross-validate", cli("gen cubic k33").out);
  CHECK(k33.status == 0);
  const auto k = nlohmann::json::parse(k33.out);
  CHECK(k["coloring"]["colors"].size() == 9);

  CHECK(cli("gen cubic random --n 10 --seed 2").status == 0);
  const Run pretty = cli("--pretty census -", cli("gen complete 4").out);
  CHECK(pretty.out.find("\n  ") != std::string::npos);

  const Run scan = cli("conjecture scan --n 8..8 --trials 3");
  CHECK(scan.status == 0);
  const auto s = nlohmann::json::parse(scan.out);
  CHECK(s["rows"][0]["n"] == 8);
  CHECK(s["counterexamples"].empty());
}
