#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "coverlab/covering.hpp"
#include "coverlab/measure.hpp"
#include "coverlab/rational.hpp"

using namespace coverlab;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(COVERLAB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.stdout_text.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json parse_stdout(const RunResult& result) {
  REQUIRE(!result.stdout_text.empty());
  return json::parse(result.stdout_text);
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "coverlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("domination --k 3 prints strength 1/3") {
  RunResult r = run_cli("domination --k 3");
  CHECK(r.exit_code == 0);
  json j = parse_stdout(r);
  CHECK(j["strength"] == "1/3");
  CHECK(j["count_proper_nontrivial"] == 16);
}

TEST_CASE("domination --k 2 exits with the degenerate code") {
  RunResult r = run_cli("domination --k 2");
  CHECK(r.exit_code == 2);
}

TEST_CASE("domination on a two-chain with point masses prints 1") {
  auto dir = temp_dir();
  const std::string poset = (dir / "chain2.poset").string();
  const std::string mu0 = (dir / "a.measure").string();
  const std::string mu1 = (dir / "b.measure").string();
  Poset chain = Poset::chain({1, 2});
  save_poset(chain, poset);
  save_measure(Measure::point_mass(chain, 1), mu0, poset);
  save_measure(Measure::point_mass(chain, 2), mu1, poset);
  RunResult r = run_cli("domination --poset " + poset + " --mu0 " + mu0 + " --mu1 " + mu1);
  CHECK(r.exit_code == 0);
  CHECK(parse_stdout(r)["strength"] == "1");
}

TEST_CASE("upsets --k 3 counts 18") {
  RunResult r = run_cli("upsets --k 3");
  CHECK(r.exit_code == 0);
  CHECK(parse_stdout(r)["count"] == 18);
  RunResult listed = run_cli("upsets --k 3 --list");
  json j = parse_stdout(listed);
  CHECK(j["up_sets"].size() == 18);
  CHECK(j["up_sets"][0].empty());  // canonical order starts at the empty up-set
}

TEST_CASE("construct + check pipeline on the Fano family") {
  auto dir = temp_dir();
  const std::string fam = (dir / "fano.fam").string();
  RunResult build = run_cli("construct --type fano --k 3 --symbol 1 --out " + fam);
  CHECK(build.exit_code == 0);
  json built = parse_stdout(build);
  CHECK(built["size"] == 435);
  CHECK(std::filesystem::exists(fam));
  CHECK(std::filesystem::exists(fam + ".manifest.json"));

  RunResult check = run_cli("check --family " + fam +
                            " --intersecting --symmetric \"2 3 4 5 6 7 1\"");
  CHECK(check.exit_code == 0);
  json checked = parse_stdout(check);
  CHECK(checked["intersecting"] == true);
  CHECK(checked["symmetric_invariant"] == true);
  CHECK(checked["symmetric_transitive"] == true);

  // the dictatorship is intersecting but not symmetric: the check fails
  const std::string dict = (dir / "dict.fam").string();
  run_cli("construct --type dictator --k 3 --n 2 --coord 1 --symbol 1 --out " + dict);
  RunResult not_sym = run_cli("check --family " + dict + " --symmetric \"2 1\"");
  CHECK(not_sym.exit_code == 1);
  CHECK(parse_stdout(not_sym)["symmetric_invariant"] == false);
}

TEST_CASE("measure of the empty family is 0") {
  auto dir = temp_dir();
  const std::string fam = (dir / "empty.fam").string();
  {
    std::ofstream out(fam);
    out << "family k=3 n=2 space=base\n";
  }
  RunResult r = run_cli("measure --family " + fam + " --t 0.5");
  CHECK(r.exit_code == 0);
  CHECK(parse_stdout(r)["measure"] == "0");
}

TEST_CASE("measure supports exact rationals and monte-carlo opt-in") {
  auto dir = temp_dir();
  const std::string fam = (dir / "dict_cover.fam").string();
  run_cli("construct --type dictator --k 3 --n 2 --coord 1 --symbol 1 --space cover --out " + fam);
  RunResult exact = run_cli("measure --family " + fam + " --t 1/2");
  CHECK(exact.exit_code == 0);
  CHECK(parse_stdout(exact)["measure"] == "1/2");

  RunResult mc = run_cli("measure --family " + fam + " --t 1/2 --monte-carlo 4000 --seed 11");
  CHECK(mc.exit_code == 0);
  json mj = parse_stdout(mc);
  const double estimate = mj["measure_estimate"];
  CHECK(estimate == doctest::Approx(0.5).epsilon(0.1));
  CHECK(mj["seed"] == 11);
  // sampling without a seed is refused
  RunResult bad = run_cli("measure --family " + fam + " --t 1/2 --monte-carlo 10");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("russo-check passes on the closed dictator family") {
  auto dir = temp_dir();
  const std::string fam = (dir / "dict_cover2.fam").string();
  run_cli("construct --type dictator --k 3 --n 2 --coord 1 --symbol 1 --space cover --out " + fam);
  RunResult r = run_cli("russo-check --family " + fam + " --t 0.3");
  CHECK(r.exit_code == 0);
  json j = parse_stdout(r);
  CHECK(j["derivative"] == "1/3");
  CHECK(j["kappa_times_total_influence"] == "1/3");
  CHECK(j["lower_bound_holds"] == true);
  CHECK(j["pass"] == true);
}

TEST_CASE("russo-check on the full cover space: zero derivative, zero influences") {
  auto dir = temp_dir();
  const std::string fam = (dir / "full_cover.fam").string();
  run_cli("construct --type full --k 3 --n 2 --space cover --out " + fam);
  ProductFamily loaded = load_family(fam);
  CHECK(loaded.size() == 36);  // closure of the embedded cube is all of W^2
  RunResult r = run_cli("russo-check --family " + fam + " --t 0.5 --step 1/1000 --tol 1e-9");
  CHECK(r.exit_code == 0);
  json j = parse_stdout(r);
  CHECK(j["derivative"] == "0");
  CHECK(j["total_influence"] == "0");
  CHECK(j["pass"] == true);
}

TEST_CASE("russo-check rejects non-up-sets") {
  auto dir = temp_dir();
  const std::string fam = (dir / "notup.fam").string();
  {
    std::ofstream out(fam);
    out << "family k=3 n=2 space=cover\n1 1\n";
  }
  RunResult r = run_cli("russo-check --family " + fam + " --t 0.3");
  CHECK(r.exit_code == 1);
}

TEST_CASE("bound-chain on the Fano family") {
  auto dir = temp_dir();
  const std::string fam = (dir / "fano2.fam").string();
  run_cli("construct --type fano --k 3 --symbol 1 --out " + fam);
  RunResult r = run_cli("bound-chain --family " + fam + " --generators \"2 3 4 5 6 7 1\"");
  CHECK(r.exit_code == 0);
  json j = parse_stdout(r);
  CHECK(parse_rational(j["stages"]["bound"]["eps"].get<std::string>()) == rat(435, 2187));
  CHECK(j["stages"]["bound"]["kappa"] == "1/3");
  CHECK(j["stages"]["half_measure"]["ok"] == true);
  const double c = j["stages"]["bound"]["empirical_C"];
  CHECK(c == doctest::Approx(0.3518343).epsilon(1e-5));
}

TEST_CASE("bound-chain at n = 1 warns that the constant is undefined") {
  auto dir = temp_dir();
  const std::string fam = (dir / "single.fam").string();
  {
    std::ofstream out(fam);
    out << "family k=3 n=1 space=base\n1\n";
  }
  RunResult r = run_cli("bound-chain --family " + fam + " --generators \"1\"");
  CHECK(r.exit_code == 0);  // the half bound still holds, only the constant is missing
  json j = parse_stdout(r);
  CHECK(parse_rational(j["stages"]["bound"]["eps"].get<std::string>()) == rat(1, 3));
  CHECK(j["stages"]["bound"]["empirical_C"].is_null());
  CHECK(j["stages"]["bound"]["warning"].is_string());
}

TEST_CASE("bound-chain rejects asymmetric input") {
  auto dir = temp_dir();
  const std::string fam = (dir / "dict2.fam").string();
  run_cli("construct --type dictator --k 3 --n 2 --coord 1 --symbol 1 --out " + fam);
  RunResult r = run_cli("bound-chain --family " + fam);
  CHECK(r.exit_code == 1);
}

TEST_CASE("search matches the known small answers") {
  RunResult r = run_cli("search --k 2 --n 3 --group cyclic");
  CHECK(r.exit_code == 0);
  CHECK(parse_stdout(r)["max_size"] == 4);
  RunResult swap = run_cli("search --k 3 --n 2 --group cyclic --method scan");
  CHECK(parse_stdout(swap)["max_size"] == 1);
}

TEST_CASE("search writes witness and manifest") {
  auto dir = temp_dir();
  const std::string witness = (dir / "witness.fam").string();
  const std::string out = (dir / "search.json").string();
  RunResult r = run_cli("search --k 2 --n 3 --witness " + witness + " --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(witness));
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(out + ".manifest.json"));
  ProductFamily loaded = load_family(witness);
  CHECK(loaded.size() == 4);
  std::ifstream mf(out + ".manifest.json");
  json manifest = json::parse(mf);
  CHECK(manifest["command"] == "search");
  CHECK(manifest["outputs"].size() == 2);
}

TEST_CASE("reruns are byte-identical apart from timing") {
  RunResult a = run_cli("search --k 3 --n 3 --group cyclic");
  RunResult b = run_cli("search --k 3 --n 3 --group cyclic");
  json ja = parse_stdout(a), jb = parse_stdout(b);
  ja.erase("wall_time_ms");
  jb.erase("wall_time_ms");
  CHECK(ja.dump() == jb.dump());

  auto dir = temp_dir();
  const std::string greedy = (dir / "greedy.fam").string();
  RunResult c = run_cli("construct --type greedy-maximal --k 3 --n 2 --seed 5 --out " + greedy);
  RunResult d = run_cli("construct --type greedy-maximal --k 3 --n 2 --seed 5 --out " + greedy);
  CHECK(parse_stdout(c).dump() == parse_stdout(d).dump());
}

TEST_CASE("budget failures use exit code 3") {
  RunResult r = run_cli("search --k 3 --n 9 --budget 1000");
  CHECK(r.exit_code == 3);
  RunResult ups = run_cli("upsets --k 6 --budget 16");
  CHECK(ups.exit_code == 3);
}

TEST_CASE("COVERLAB_BUDGET overrides the default budget") {
  const std::string command = "COVERLAB_BUDGET=16 " + std::string(COVERLAB_BIN) +
                              " upsets --k 6 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[256];
  while (fread(buffer, 1, sizeof buffer, pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("influence command reports per-coordinate values") {
  auto dir = temp_dir();
  const std::string fam = (dir / "dict3.fam").string();
  run_cli("construct --type dictator --k 3 --n 2 --coord 1 --symbol 1 --space cover --out " + fam);
  RunResult r = run_cli("influence --family " + fam + " --t 1/2");
  CHECK(r.exit_code == 0);
  json j = parse_stdout(r);
  CHECK(j["per_coordinate"][0] == "1");
  CHECK(j["per_coordinate"][1] == "0");
  CHECK(j["total"] == "1");
  CHECK(j["bkkkl_ratio"].is_number());
}
