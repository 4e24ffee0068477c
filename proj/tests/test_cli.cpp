#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stablab/cli.hpp"
#include "stablab/json_io.hpp"

using namespace stablab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json result_of(const Run& r) {
  INFO(r.err);
  return parse_json_text(r.out)["result"];
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "stablab_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

const std::string kZ2 = "<a, b | [a,b]>";
const std::vector<std::string> kDesk{"--presentation", kZ2, "--n", "3", "--assign", "a=1,0,2;b=0,2,1"};
const std::vector<std::string> kExact{"--presentation", kZ2, "--n", "4", "--assign", "a=1,2,3,0", "--assign",
                                      "b=2,3,0,1"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Replaying the echoed invocation must reproduce the document exactly.
void check_replay(const Run& first) {
  const Json doc = parse_json_text(first.out);
  std::vector<std::string> argv;
  for (const auto& a : doc["invocation"]) argv.push_back(a.get<std::string>());
  const Run again = run(argv);
  CHECK(again.code == first.code);
  CHECK(again.out == first.out);
}

}  // namespace

TEST_CASE("defect command") {
  const Run exact = run(cat({"defect"}, kExact));
  CHECK(exact.code == exit_code::kOk);
  CHECK(result_of(exact)["report"]["defect"] == 0.0);
  CHECK(result_of(exact)["is_homomorphism"] == true);

  const Run desk = run(cat({"defect"}, kDesk));
  CHECK(desk.code == exit_code::kOk);
  CHECK(result_of(desk)["report"]["defect"] == 1.0);
  const Json doc = parse_json_text(desk.out);
  CHECK(doc["tool"] == "stablab");
  CHECK(doc["seed"] == 0);
  CHECK(doc["command"] == "defect");
  check_replay(desk);

  const Run bad = run({"defect", "--presentation", "<a, b | [a,b>", "--n", "3"});
  CHECK(bad.code == exit_code::kInput);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"defect", "--presentation", kZ2, "--n", "3", "--assign", "c=0,1,2"}).code == exit_code::kInput);
  CHECK(run({"defect", "--presentation", kZ2, "--n", "3", "--assign", "a=0,0,2"}).code == exit_code::kInput);
  CHECK(run({"defect", "--nonsense"}).code == exit_code::kInput);
  CHECK(run({}).code == exit_code::kInput);
}

TEST_CASE("homdist command") {
  const Run desk = run(cat({"homdist", "--exact"}, kDesk));
  REQUIRE(desk.code == exit_code::kOk);
  CHECK(result_of(desk)["homdist"]["value"] == 2.0 / 3.0);
  CHECK(result_of(desk)["homdist"]["method"] == "exact");
  CHECK(result_of(run(cat({"homdist", "--exact"}, kExact)))["homdist"]["value"] == 0.0);
  const Run big = run({"homdist", "--exact", "--presentation", kZ2, "--n", "9", "--random"});
  CHECK(big.code == exit_code::kCaps);
  const Run upper = run(cat({"homdist", "--upper"}, kDesk));
  CHECK(upper.code == exit_code::kOk);
  CHECK(result_of(upper)["homdist"]["method"] == "upper_bound");
  CHECK(result_of(upper)["homdist"]["value"].get<double>() >= 2.0 / 3.0);
  check_replay(upper);
  CHECK(run(cat({"homdist", "--exact", "--upper"}, kDesk)).code == exit_code::kInput);
}

TEST_CASE("solve command") {
  const Run desk = run(cat({"solve", "--M", "1", "--strategy", "snap"}, kDesk));
  REQUIRE(desk.code == exit_code::kOk);
  const Json r = result_of(desk);
  CHECK(r["trace"]["converged"] == true);
  CHECK(r["trace"]["certified"] == true);
  CHECK(r["trace"]["total_distance"] == 2.0 / 3.0);
  CHECK(r["final_defect"] == 0.0);
  check_replay(desk);

  const Run trivial = run(cat({"solve"}, kExact));
  CHECK(trivial.code == exit_code::kOk);
  CHECK(result_of(trivial)["trace"]["steps"].empty());

  const Run tight = run(cat({"solve", "--M", "0.5"}, kDesk));
  CHECK(tight.code == exit_code::kNotConverged);
  CHECK(result_of(tight)["trace"]["certified"] == false);
  CHECK_FALSE(result_of(tight)["trace"]["violations"].empty());
  CHECK(run(cat({"solve", "--q", "1.5"}, kDesk)).code == exit_code::kInput);
}

TEST_CASE("solve accepts its own input format") {
  const Run desk = run(cat({"defect"}, kDesk));
  const fs::path in = scratch("desk_input.json");
  std::ofstream(in, std::ios::binary) << result_of(desk)["input"].dump(2);
  const Run from_file = run({"homdist", "--exact", "--input", in.string()});
  REQUIRE(from_file.code == exit_code::kOk);
  CHECK(result_of(from_file)["homdist"]["value"] == 2.0 / 3.0);
  check_replay(from_file);
  CHECK(run({"homdist", "--input", (scratch("missing.json")).string()}).code == exit_code::kInput);
}

TEST_CASE("rate command") {
  const Run free = run({"rate", "--presentation", "<a | >", "--n", "3,4", "--samples", "20"});
  REQUIRE(free.code == exit_code::kOk);
  const Json fr = result_of(free);
  CHECK(fr["fit"]["defined"] == false);
  for (const auto& row : fr["curve"]) CHECK(row["D_emp"] == 0.0);

  const std::vector<std::string> z2{"rate", "--presentation", kZ2, "--n", "4,5,6", "--grid", "0.1:0.8:7log",
                                    "--samples", "40", "--seed", "3"};
  const Run a = run(z2);
  REQUIRE(a.code == exit_code::kOk);
  const Json ar = result_of(a);
  CHECK(ar["monotone"] == true);
  CHECK(ar["linear_lower"]["c_max"].get<double>() > 0);
  CHECK(ar["scale_note"].get<std::string>().find("desk-scale") != std::string::npos);
  check_replay(a);
  const Run threaded = run(cat(z2, {"--threads", "3"}));
  CHECK(threaded.out == a.out);

  const fs::path csv = scratch("rate.csv");
  REQUIRE(run(cat(z2, {"--format", "csv", "--out", csv.string()})).code == exit_code::kOk);
  const std::string first = slurp(csv), summary = slurp(csv.string() + ".summary.json");
  REQUIRE(run(cat(z2, {"--format", "csv", "--out", csv.string()})).code == exit_code::kOk);
  CHECK(slurp(csv) == first);
  CHECK(slurp(csv.string() + ".summary.json") == summary);
  CHECK(first.rfind("# stablab", 0) == 0);
  CHECK(first.find("\ndelta,D_emp,samples,method\n") != std::string::npos);
  CHECK(first.find("# seed: 3\n") != std::string::npos);
  CHECK(parse_json_text(summary)["result"]["fit"].contains("alpha"));

  CHECK(run({"rate", "--presentation", kZ2, "--grid", "0.5:0.1:4log"}).code == exit_code::kInput);
}

TEST_CASE("compare command") {
  const std::vector<std::string> base{"compare", "--presentation", kZ2, "--n", "4,5", "--samples", "30"};
  const Run same = run(cat(base, {"--moves", ""}));
  REQUIRE(same.code == exit_code::kOk);
  const Json v = result_of(same)["verdict"];
  CHECK(v["equivalent"] == true);
  CHECK(v["forward"]["witness_C"] == 1.0);
  CHECK(v["backward"]["witness_C"] == 1.0);
  check_replay(same);

  const Run added = run(cat(base, {"--moves", "add_generator c = a*b", "--target", "<a, b, c | [a,b], c*b^-1*a^-1>"}));
  REQUIRE(added.code == exit_code::kOk);
  CHECK(result_of(added)["verdict"]["equivalent"] == true);
  check_replay(added);

  CHECK(run(cat(base, {"--moves", "add_relator a*b by r0"})).code == exit_code::kInput);
  CHECK(run(cat(base, {"--moves", "add_generator c = a*b", "--target", kZ2})).code == exit_code::kInput);
  CHECK(run(cat(base, {"--moves", "frobnicate"})).code == exit_code::kInput);
}

TEST_CASE("check-metric command") {
  const Run sym = run({"check-metric", "--metric", "sym_hamming", "--n", "6"});
  REQUIRE(sym.code == exit_code::kOk);
  CHECK(result_of(sym)["max_violation"] == 0.0);
  const Run sch = run({"check-metric", "--metric", "u_schatten", "--p", "1", "--n", "3", "--triples", "200"});
  REQUIRE(sch.code == exit_code::kOk);
  CHECK(result_of(sch)["max_violation"].get<double>() < 1e-9);
  check_replay(sch);
  CHECK(run({"check-metric", "--metric", "u_schatten", "--p", "0.5", "--n", "3"}).code == exit_code::kInput);
  CHECK(run({"check-metric", "--metric", "bogus"}).code == exit_code::kInput);
}

TEST_CASE("seed falls back to the environment") {
  const std::vector<std::string> args{"defect", "--presentation", kZ2, "--n", "5", "--random"};
  ::setenv("STABLAB_SEED", "42", 1);
  const Run env = run(args);
  ::unsetenv("STABLAB_SEED");
  REQUIRE(env.code == exit_code::kOk);
  CHECK(parse_json_text(env.out)["seed"] == 42);
  CHECK(run(cat(args, {"--seed", "42"})).out == env.out);
  CHECK(run(args).out != env.out);
  CHECK(parse_json_text(run(args).out)["seed"] == 0);
}

TEST_CASE("options can come from a config file") {
  const fs::path cfg = scratch("rate.ini");
  std::ofstream(cfg) << "presentation = \"<a, b | [a,b]>\"\nn = [4, 5]\nsamples = 20\nseed = 9\ngrid = \"0.2:0.8:3log\"\n";
  const Run from_file = run({"rate", "--config", cfg.string()});
  REQUIRE(from_file.code == exit_code::kOk);
  const Json doc = parse_json_text(from_file.out);
  CHECK(doc["seed"] == 9);
  CHECK(doc["config"]["samples"] == 20);
  CHECK(doc["config"]["n"] == Json::array({4, 5}));
  check_replay(from_file);
}

TEST_CASE("every command writes byte-identical files on rerun") {
  const std::vector<std::vector<std::string>> commands{
      cat({"defect"}, kDesk),
      cat({"homdist", "--upper", "--seed", "4"}, kDesk),
      cat({"solve", "--strategy", "descent", "--seed", "8"}, kDesk),
      {"rate", "--presentation", kZ2, "--n", "4", "--samples", "15", "--seed", "2"},
      {"compare", "--presentation", kZ2, "--n", "4", "--samples", "15", "--moves", "add_generator c = a*b"},
      {"check-metric", "--metric", "u_op", "--n", "2,3", "--triples", "50", "--seed", "5"}};
  for (const auto& c : commands) {
    const fs::path path = scratch(c[0] + ".json");
    const Run a = run(cat(c, {"--out", path.string()}));
    const std::string first = slurp(path);
    const Run b = run(cat(c, {"--out", path.string()}));
    CHECK(a.code == b.code);
    CHECK(!first.empty());
    CHECK(slurp(path) == first);
  }
}
