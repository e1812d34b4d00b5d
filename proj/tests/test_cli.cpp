#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qutrit/errors.hpp"
#include "qutrit/gates.hpp"

using namespace qutrit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qutrit_cli_" + name)).string();
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string p = temp_path(name);
  std::ofstream(p) << content;
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  const ScaledUnitary h = standard_hadamard();
  CHECK(cli::matrix_from_json(nlohmann::json::parse(cli::matrix_to_json(h).dump())) == h);
  CHECK_THROWS_AS(cli::matrix_from_json(nlohmann::json::parse(R"({"num": 1, "pi_exp": 0})")), InvalidInput);
  const auto not_unitary = nlohmann::json::parse(
      R"({"num": [[[2,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0]],
                  [[0,0,0,0,0,0],[1,0,0,0,0,0],[0,0,0,0,0,0]],
                  [[0,0,0,0,0,0],[0,0,0,0,0,0],["1","0","0","0","0","0"]]], "pi_exp": 0})");
  CHECK_THROWS_AS(cli::matrix_from_json(not_unitary), InvalidInput);
}

TEST_CASE("synth on identity prints the empty word") {
  const std::string id = write_file("id.json", cli::matrix_to_json(ScaledUnitary()).dump());
  const Run r = run({"synth", "--in", id});
  CHECK(r.code == 0);
  CHECK(r.out == "\n");
}

TEST_CASE("eval then synth") {
  const Run e = run({"eval", "--word", "H T H S"});
  REQUIRE(e.code == 0);
  const std::string path = write_file("g.json", e.out);
  const Run s = run({"synth", "--in", path});
  REQUIRE(s.code == 0);
  CHECK(canonicalize(evaluate(parse_word(s.out))) == canonicalize(cli::read_matrix_file(path)));
  const Run n = run({"nform", "--in", path});
  REQUIRE(n.code == 0);
  const auto j = nlohmann::json::parse(n.out);
  CHECK(j["bs_length"] == 3);
  REQUIRE(j["letters"].size() == 3);
  CHECK(j["letters"][2] == "HS");
}

TEST_CASE("nform count") {
  CHECK(run({"nform", "count", "--r", "2"}).out == "204120\n");
  CHECK(run({"nform", "count", "--r", "0"}).out == "1944\n");
  CHECK(run({"nform", "count", "--r", "-1"}).code == 2);
  CHECK(run({"nform"}).code == 2);
}

TEST_CASE("gates dump") {
  const Run r = run({"gates", "dump", "--group", "C3"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 216);
  CHECK(run({"gates", "dump", "--group", "C7"}).code == 2);
}

TEST_CASE("modred") {
  CHECK(run({"modred", "--gate", "H", "--prime", "0"}).out == "14 14 14\n14 3 2\n14 2 3\n");
  CHECK(run({"modred", "--gate", "S", "--prime", "0"}).out == "5 0 0\n0 16 0\n0 0 5\n");
  CHECK(run({"modred", "--gate", "T", "--prime", "0"}).out == "4 0 0\n0 1 0\n0 0 5\n");
  CHECK(run({"modred", "--gate", "T", "--prime", "3"}).code == 2);
}

TEST_CASE("verify subcommand") {
  const Run r = run({"verify", "run", "--filter", "sizes"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const Run j = run({"verify", "run", "--filter", "m3", "--json"});
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
  CHECK(run({"verify", "list"}).out.find("levels.gap") != std::string::npos);
}

TEST_CASE("approx probe is byte-reproducible") {
  const std::string a = temp_path("a.csv"), b = temp_path("b.csv");
  REQUIRE(run({"approx", "probe", "--targets", "4", "--rmax", "1", "--seed", "5", "--out", a}).code == 0);
  REQUIRE(run({"approx", "probe", "--targets", "4", "--rmax", "1", "--seed", "5", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("target_id,r,best_distance,best_word_len,bs_len\n", 0) == 0);
  CHECK(run({"approx", "probe", "--rmax", "4", "--out", a}).code == 1);
}

TEST_CASE("usage and data errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"synth"}).code == 2);
  CHECK(run({"synth", "--in", temp_path("does_not_exist.json")}).code == 1);
  CHECK(run({"synth", "--in", write_file("junk.json", "{not json")}).code == 1);
  CHECK(run({"eval", "--word", "H Q"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
