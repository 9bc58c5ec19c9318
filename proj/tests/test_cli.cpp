#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "ctv/chessboard.hpp"
#include "ctv/json_io.hpp"
#include "ctv/tverberg.hpp"
#include "cli.hpp"

using namespace ctv;
using json = nlohmann::json;

namespace {

struct RunOutcome {
  int code;
  json report;
  std::string err;
};

RunOutcome run(const std::vector<std::string>& args, const cli::Hooks& hooks = {}) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err, hooks);
  RunOutcome outcome{code, json(), err.str()};
  if (!out.str().empty()) {
    outcome.report = json::parse(out.str());
  }
  return outcome;
}

std::string write_config(const ColoredConfiguration& cfg, const std::string& name) {
  std::string path = "cli_test_" + name + ".json";
  std::ofstream f(path);
  f << to_json(cfg).dump(2);
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"chessboard"}).code == 2);
  CHECK(run({"nonsense", "--r", "3"}).code == 2);
  CHECK(run({"cocycle", "--d", "0", "--r", "3", "--verdict"}).code == 2);
}

TEST_CASE("chessboard command reports structure") {
  auto outcome = run({"chessboard", "--r", "4", "--n", "3", "--homology",
                      "--f-vector", "--pseudomanifold", "--json-only"});
  REQUIRE(outcome.code == 0);
  const json& res = outcome.report.at("result");
  CHECK(res.at("f_vector") == json::array({12, 36, 24}));
  CHECK(res.at("homology")[1].at("betti") == 2);
  CHECK(res.at("homology")[2].at("betti") == 1);
  CHECK(res.at("pseudomanifold").at("orientable") == true);
  CHECK(outcome.report.at("exact") == true);
  CHECK(outcome.err.empty());  // --json-only silences the summary
}

TEST_CASE("chessboard --dump emits the complex schema") {
  auto outcome = run({"chessboard", "--r", "2", "--n", "1", "--dump", "--json-only"});
  REQUIRE(outcome.code == 0);
  const json& c = outcome.report.at("result").at("complex");
  CHECK(c.at("num_vertices") == 2);
  CHECK(c.at("facets") == json::array({{0}, {1}}));
  Complex back = complex_from_json(c);
  CHECK(back.dimension == 0);
}

TEST_CASE("collapse command verifies the matching") {
  auto outcome = run({"collapse", "--r", "3"});
  REQUIRE(outcome.code == 0);
  const json& res = outcome.report.at("result");
  CHECK(res.at("valid") == true);
  CHECK(res.at("pairs") == 6);
  CHECK(res.at("equivariant") == true);
  CHECK(res.at("residual_dimension") == 1);
}

TEST_CASE("cocycle verdict command") {
  auto outcome = run({"cocycle", "--d", "1", "--r", "3", "--verdict"});
  REQUIRE(outcome.code == 0);
  const json& v = outcome.report.at("result").at("verdict");
  CHECK(v.at("phi_value") == "2");
  CHECK(v.at("divides") == false);
  CHECK(v.at("extension_exists") == false);
  CHECK(v.at("omega_values") == json::array({0, 0}));
}

TEST_CASE("cocycle full checks pass for the base case") {
  auto outcome = run({"cocycle", "--d", "1", "--r", "3", "--boundaries",
                      "--claims", "--chains"});
  REQUIRE(outcome.code == 0);
  const json& res = outcome.report.at("result");
  CHECK(res.at("boundaries").at("phi_identity") == true);
  CHECK(res.at("claims").at("fixed_row_claim") == true);
  CHECK(res.at("chains").at("phi_terms") == 6);
}

TEST_CASE("injected fault flips the exit code to 1") {
  ConfigSpace cs(1, 3);
  SpecialChains corrupted = special_chains(cs);
  auto first = corrupted.phi.terms().begin();
  Simplex s = first->first;
  Int c = first->second;
  corrupted.phi.add(s, Int(-2) * c);  // flip one sign

  cli::Hooks hooks;
  hooks.override_chains = &corrupted;
  auto outcome = run({"cocycle", "--d", "1", "--r", "3", "--boundaries"}, hooks);
  CHECK(outcome.code == 1);
  CHECK(outcome.report.at("result").at("boundaries").at("phi_identity") == false);

  // The same command without the fault passes.
  CHECK(run({"cocycle", "--d", "1", "--r", "3", "--boundaries"}).code == 0);
}

TEST_CASE("partition find and count on a reference file") {
  auto path = write_config(reference_configuration(2, 3), "ref23");
  auto count = run({"partition", "count", "--config", path, "--r", "3"});
  REQUIRE(count.code == 0);
  CHECK(count.report.at("result").at("count") == 4);
  CHECK(count.report.at("result").at("config").at("class_sizes") ==
        json::array({2, 2, 2, 1}));
  CHECK(count.report.at("result").at("config").at("total") == 7);

  auto find = run({"partition", "find", "--config", path, "--r", "3"});
  REQUIRE(find.code == 0);
  CHECK(find.report.at("result").at("found") == true);
  CHECK(find.report.at("result").contains("witness"));

  auto missing = run({"partition", "find", "--config", "no_such_file.json", "--r", "3"});
  CHECK(missing.code == 2);
}

TEST_CASE("malformed configurations are usage errors naming the field") {
  std::ofstream f("cli_test_bad.json");
  f << R"({"d": 2, "classes": [[["1/0", "2"]]]})";
  f.close();
  auto outcome = run({"partition", "count", "--config", "cli_test_bad.json", "--r", "2"});
  CHECK(outcome.code == 2);
  CHECK(outcome.err.find("classes[0][0][0]") != std::string::npos);

  std::ofstream g("cli_test_dim.json");
  g << R"({"d": 2, "classes": [[["1", "2"], ["3"]]]})";
  g.close();
  auto mismatch = run({"partition", "count", "--config", "cli_test_dim.json", "--r", "2"});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("classes[0][1]") != std::string::npos);
}

TEST_CASE("budget exhaustion exits with 3") {
  auto path = write_config(reference_configuration(2, 3), "ref23b");
  auto outcome = run({"partition", "count", "--config", path, "--r", "3",
                      "--budget", "2"});
  CHECK(outcome.code == 3);

  // Chain construction for large parameters trips the term budget.
  auto big = run({"cocycle", "--d", "3", "--r", "7", "--chains"});
  CHECK(big.code == 3);
}

TEST_CASE("trial command is reproducible byte for byte") {
  auto a = run({"trial", "--d", "1", "--r", "3", "--class-size", "2",
                "--trials", "5", "--seed", "11"});
  auto b = run({"trial", "--d", "1", "--r", "3", "--class-size", "2",
                "--trials", "5", "--seed", "11"});
  REQUIRE(a.code == 0);
  CHECK(a.report.at("result") == b.report.at("result"));
  CHECK(a.report.at("result").at("successes") == 5);
}

TEST_CASE("reduce command round-trips a padded configuration") {
  ColoredConfiguration cfg;
  cfg.d = 1;
  auto point = [](std::vector<int> coords) {
    RationalPoint p;
    for (int c : coords) {
      p.coords.emplace_back(c);
    }
    return p;
  };
  cfg.classes = {{point({0}), point({7})}, {point({3})}, {point({5})}, {point({2})}};
  auto path = write_config(cfg, "reduce");
  auto outcome = run({"reduce", "--config", path, "--r", "3"});
  REQUIRE(outcome.code == 0);
  CHECK(outcome.report.at("result").at("verified") == true);
  CHECK(outcome.report.at("result").at("padded").at("d") == 2);
}

TEST_CASE("configuration JSON round-trips") {
  auto cfg = reference_configuration(2, 3);
  auto j = to_json(cfg);
  auto back = configuration_from_json(j);
  CHECK(to_json(back) == j);
}

TEST_CASE("complex and chain JSON round-trips") {
  Complex board = chessboard_complex({3, 2});
  json j = to_json(board);
  CHECK(j.at("num_vertices") == 6);
  CHECK(j.at("labels")[0] == json::array({1, 1}));
  Complex back = complex_from_json(j);
  CHECK(back.facets == board.facets);
  CHECK(back.labels == board.labels);

  Chain z = orientation_cycle(3);
  Chain zback = chain_from_json(to_json(z));
  CHECK(zback == z);
}
