// End-to-end tests of the command line tool. Each case invokes the installed
// binary through a shell and checks both output and exit status; polynomial
// answers are re-derived through the library as a second route.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "catalan/contfrac.hpp"
#include "catalan/pathdiag.hpp"
#include "catalan/series.hpp"

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kBin = CATALAN_CF_BIN;

struct CliResult {
  std::string output;
  int status = -1;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + (env_prefix.empty() ? "" : " ") + kBin + " " + args +
                              " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  const int wait_status = pclose(pipe);
  result.status = WIFEXITED(wait_status) ? WEXITSTATUS(wait_status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

using namespace catalan;

TEST_CASE("expand emits integer rows in csv form") {
  const CliResult result =
      run_cli("expand --cf typeA --order 4 --set p=1 --set q=1 --set t=1 --set u=1 --set w=1 --csv");
  CHECK(result.status == 0);
  CHECK(lines_of(result.output) ==
        std::vector<std::string>{"0,1", "1,1", "2,2", "3,5", "4,14"});
}

TEST_CASE("expand emits a parseable series in json form") {
  const CliResult result = run_cli("expand --cf typeA --order 3 --json");
  REQUIRE(result.status == 0);
  const Series series = Series::from_json(nlohmann::json::parse(result.output));
  CHECK(series == jfraction_series(named_cf(CfType::TypeA), 3));
}

TEST_CASE("expand requires exactly one output format") {
  CHECK(run_cli("expand --cf typeA --order 2").status == 2);
  CHECK(run_cli("expand --cf typeA --order 2 --json --csv").status == 2);
}

TEST_CASE("expand rejects an unknown fraction name") {
  const CliResult result = run_cli("expand --cf typeD --order 2 --csv");
  CHECK(result.status == 2);
  CHECK(result.output.find("typeA") != std::string::npos);
}

TEST_CASE("stats reports the worked statistics") {
  const CliResult result = run_cli("stats --perm 472589316 --boundary zero");
  REQUIRE(result.status == 0);
  const nlohmann::json j = nlohmann::json::parse(result.output);
  CHECK(j.at("perm") == "472589316");
  CHECK(j.at("n") == 9);
  CHECK(j.at("pk") == 3);
  CHECK(j.at("val") == 2);
  CHECK(j.at("des") == 3);
  CHECK(j.at("peaks") == nlohmann::json({6, 7, 9}));
  CHECK(j.at("vincular3").at("total") == 9);
  CHECK(run_cli("stats --perm 21 --boundary sideways").status == 2);
}

TEST_CASE("encode and decode invert each other") {
  const CliResult encoded = run_cli("encode --perm 423615");
  CHECK(encoded.status == 0);
  CHECK(lines_of(encoded.output) == std::vector<std::string>{"m1,m1,l2,f1,f2,f1"});
  const CliResult decoded = run_cli("decode --word m1,m1,l2,f1,f2,f1");
  CHECK(decoded.status == 0);
  CHECK(lines_of(decoded.output) == std::vector<std::string>{"423615"});
  CHECK(run_cli("decode --word f1,f1").status == 2);
}

TEST_CASE("enumerate lists class members") {
  const CliResult result = run_cli("enumerate --class a321 --n 5");
  CHECK(result.status == 0);
  CHECK(lines_of(result.output).size() == 42);
  const CliResult as_json = run_cli("enumerate --class a321 --n 5 --json");
  REQUIRE(as_json.status == 0);
  const nlohmann::json j = nlohmann::json::parse(as_json.output);
  CHECK(j.at("count") == 42);
  CHECK(j.at("perms").size() == 42);
}

TEST_CASE("enumerate emits class polynomials") {
  const CliResult result = run_cli("enumerate --class a321 --n 1 --poly");
  CHECK(result.status == 0);
  CHECK(lines_of(result.output) == std::vector<std::string>{"u"});
}

TEST_CASE("biject reports diagram, weight and round trip") {
  const CliResult result = run_cli("biject --map phi2 --perm 213");
  REQUIRE(result.status == 0);
  const nlohmann::json j = nlohmann::json::parse(result.output);
  CHECK(j.at("weight") == "p*t*w");
  CHECK(j.at("roundtrip") == true);
  // A permutation outside the class is rejected.
  CHECK(run_cli("biject --map phi1 --perm 321").status == 2);
  CHECK(run_cli("biject --map nosuch --perm 21").status == 2);
}

TEST_CASE("pathsum agrees with the library route") {
  const CliResult result = run_cli("pathsum --type a --n 3");
  CHECK(result.status == 0);
  CHECK(lines_of(result.output) == std::vector<std::string>{path_sum(3, DiagramType::A).str()});
}

TEST_CASE("gamma compares both routes") {
  const CliResult result = run_cli("gamma --n 3 --via both");
  REQUIRE(result.status == 0);
  const nlohmann::json j = nlohmann::json::parse(result.output);
  CHECK(j.at("equal") == true);
  REQUIRE(j.at("gammas").size() == 2);
  CHECK(j.at("gammas").at(1).at("cf") == j.at("gammas").at(1).at("perms"));
}

TEST_CASE("orbit prints members and representative") {
  const CliResult result = run_cli("orbit --perm 21");
  CHECK(result.status == 0);
  CHECK(lines_of(result.output) ==
        std::vector<std::string>{"12", "21", "representative: 12"});
}

TEST_CASE("table prints reference rows") {
  const CliResult result = run_cli("table --which barc --nmax 5");
  CHECK(result.status == 0);
  const std::vector<std::string> rows = lines_of(result.output);
  REQUIRE(rows.size() == 5);
  CHECK(rows.back() == "5,16,17,7,2");
  CHECK(run_cli("table --which nosuch --nmax 3").status == 2);
}

TEST_CASE("verify runs one theorem and writes a report") {
  const std::string report_path = "cli_verify_report.json";
  const CliResult result =
      run_cli("verify --theorem l5.2 --nmax 4 --json " + report_path);
  CHECK(result.status == 0);
  CHECK(result.output.rfind("PASS l5.2 nmax=4", 0) == 0);
  std::ifstream in(report_path);
  REQUIRE(in.good());
  const nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("reports").size() == 1);
  CHECK(j.at("reports").at(0).at("theorem") == "l5.2");
  in.close();
  std::remove(report_path.c_str());

  CHECK(run_cli("verify --theorem nosuch").status == 2);
  CHECK(run_cli("verify").status == 2);
  CHECK(run_cli("verify --all --theorem l5.2").status == 2);
}

TEST_CASE("environment cap bounds exhaustive subcommands") {
  const CliResult result = run_cli("pathsum --type a --n 5", "CATALAN_CF_NMAX_CAP=3");
  CHECK(result.status == 2);
  CHECK(result.output.find("error:") != std::string::npos);
  // Unaffected below the cap.
  CHECK(run_cli("pathsum --type a --n 3", "CATALAN_CF_NMAX_CAP=3").status == 0);
}

TEST_CASE("config file sets default specializations") {
  const std::string config_path = "cli_test_config.txt";
  {
    std::ofstream out(config_path);
    out << "# all-ones defaults\n";
    out << "p=1\nq=1\nt=1\nu=1\nw=1\n";
  }
  const CliResult result =
      run_cli("--config " + config_path + " expand --cf typeA --order 3 --csv");
  CHECK(result.status == 0);
  CHECK(lines_of(result.output) == std::vector<std::string>{"0,1", "1,1", "2,2", "3,5"});

  // A --set on the command line wins over the config default.
  const CliResult overridden =
      run_cli("--config " + config_path + " expand --cf typeA --order 3 --set t=0 --csv");
  CHECK(overridden.status == 0);
  CHECK(lines_of(overridden.output) == std::vector<std::string>{"0,1", "1,1", "2,1", "3,1"});
  std::remove(config_path.c_str());

  {
    std::ofstream out(config_path);
    out << "no equals sign here\n";
  }
  const CliResult bad = run_cli("--config " + config_path + " expand --cf typeA --order 2 --csv");
  CHECK(bad.status != 0);
  std::remove(config_path.c_str());
}
