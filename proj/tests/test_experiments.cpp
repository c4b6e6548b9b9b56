#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "rig/detail/random.hpp"
#include "rig/experiments.hpp"
#include "rig/io.hpp"

using namespace rig;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() /
                   ("rig-test-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("regime classification") {
  CHECK(regime_classifier(0.5) == Regime::somewhere_dense_expected);
  CHECK(regime_classifier(1.0) == Regime::somewhere_dense_expected);
  CHECK(regime_classifier(1.5) == Regime::bounded_expansion_expected);
  CHECK_THROWS_AS(regime_classifier(0.0), std::invalid_argument);
  CHECK_THROWS_AS(regime_classifier(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(regime_classifier(std::nan("")), std::invalid_argument);
  CHECK(to_string(Regime::somewhere_dense_expected) == "somewhere_dense_expected");
  CHECK(to_string(Regime::bounded_expansion_expected) == "bounded_expansion_expected");
}

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(median({5.0}) == 5.0);
  CHECK_THROWS_AS(median({}), std::invalid_argument);
}

TEST_CASE("measurement seeds are stable and distinct") {
  CHECK(measurement_seed(7, "degeneracy") ==
        detail::fnv1a("degeneracy", detail::fnv1a_u64(7)));
  CHECK(measurement_seed(7, "degeneracy") == measurement_seed(7, "degeneracy"));
  CHECK(measurement_seed(7, "degeneracy") != measurement_seed(8, "degeneracy"));
  CHECK(measurement_seed(7, "degeneracy") != measurement_seed(7, "grad0"));
}

TEST_CASE("config hash is stable and shape-checked") {
  ExperimentConfig c = preset_config("degen-alpha-0.5");
  std::string h = config_hash(c);
  REQUIRE(h.size() == 22);
  CHECK(h.substr(0, 6) == "fnv1a:");
  for (char ch : h.substr(6)) CHECK(std::isxdigit(static_cast<unsigned char>(ch)));
  CHECK(h == config_hash(c));
  ExperimentConfig changed = c;
  changed.alpha = 0.6;
  CHECK(config_hash(changed) != h);
  changed = c;
  changed.base_seed += 1;
  CHECK(config_hash(changed) != h);
}

TEST_CASE("presets are valid and complete") {
  std::vector<std::string> names = preset_names();
  REQUIRE(names.size() == 4);
  for (const std::string& name : names) {
    ExperimentConfig c = preset_config(name);
    CHECK(c.name == name);
    CHECK(c.trials >= 1);
    CHECK_FALSE(c.n_values.empty());
  }
  CHECK(preset_config("fig-expdata-desk").coloring_ks ==
        std::vector<int>{2, 3, 4, 5});
  CHECK(preset_config("degen-alpha-0.5").n_values ==
        std::vector<int>{1000, 4000, 16000});
  CHECK(preset_config("hyper-growth").four_point_delta);
  REQUIRE(preset_config("concentration-desk").concentration.has_value());
  CHECK(preset_config("concentration-desk").concentration->epsilon == 0.1);
  CHECK_THROWS_AS(preset_config("nope"), std::invalid_argument);
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  c.n_values = {100};
  CHECK_NOTHROW(run_experiment(c));  // no measurements is allowed

  ExperimentConfig bad = c;
  bad.alpha = -1;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.n_values = {100, 100};
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.n_values = {};
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.trials = 0;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.name = "has space";
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.name = ".hidden";
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.coloring_ks = {3, 2};
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.concentration = ConcentrationSpec{1.5, {10}};
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
  bad = c;
  bad.delta_size_cap = 2;
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}

TEST_CASE("experiment runs are deterministic and ordered") {
  ExperimentConfig c;
  c.name = "unit";
  c.alpha = 1.2;
  c.beta = 0.5;
  c.gamma = 2.0;
  c.n_values = {30, 60};
  c.trials = 3;
  c.base_seed = 11;
  c.degeneracy = true;
  c.grad0 = true;
  c.coloring_ks = {2};
  c.concentration = ConcentrationSpec{0.5, {5}};
  c.degree_tail_thresholds = {4};

  ExperimentResult a = run_experiment(c);
  ExperimentResult b = run_experiment(c);

  CHECK(a.trial_seeds == std::vector<std::uint64_t>{11, 12, 13});
  CHECK(a.config_hash == config_hash(c));

  std::vector<std::string> order{"degeneracy", "grad0", "coloring_k=2",
                                 "concentration_ok_s=5", "degree_tail_d=4"};
  REQUIRE(a.cells.size() == order.size() * 2);
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].n == (i < order.size() ? 30 : 60));
    CHECK(a.cells[i].measurement == order[i % order.size()]);
    REQUIRE(a.cells[i].values.size() == 3);
    for (int t = 0; t < 3; ++t) {
      REQUIRE(a.cells[i].values[t].has_value());
      CHECK(a.cells[i].values[t] == b.cells[i].values[t]);
    }
  }
}

TEST_CASE("measurement cells carry sensible values") {
  ExperimentConfig c;
  c.name = "values";
  c.alpha = 1.0;
  c.beta = 1.0;
  c.gamma = 1.5;
  c.n_values = {80};
  c.trials = 4;
  c.base_seed = 3;
  c.degeneracy = true;
  c.max_attr_degree = true;
  c.four_point_delta = true;
  c.special_certificate = true;

  ExperimentResult r = run_experiment(c);
  REQUIRE(r.cells.size() == 4);
  for (const CellValues& cell : r.cells)
    for (const auto& v : cell.values) {
      REQUIRE(v.has_value());
      CHECK(*v >= 0.0);
      if (cell.measurement == "four_point_delta")
        CHECK(*v * 2 == std::floor(*v * 2));  // half-integer
      else
        CHECK(*v == std::floor(*v));  // integer-valued counts
    }
}

TEST_CASE("config json round trip") {
  TempDir tmp;
  ExperimentConfig c;
  c.name = "roundtrip";
  c.alpha = 1.4;
  c.beta = 0.3;
  c.gamma = 2.5;
  c.n_values = {50, 100};
  c.trials = 2;
  c.base_seed = 99;
  c.grad0 = true;
  c.coloring_ks = {2, 4};
  c.concentration = ConcentrationSpec{0.2, {10, 20}};
  c.degree_tail_thresholds = {8, 16};
  c.delta_size_cap = 123;

  std::string path = (tmp.path / "config.json").string();
  nlohmann::json j{
      {"name", "roundtrip"},
      {"alpha", 1.4},
      {"beta", 0.3},
      {"gamma", 2.5},
      {"n_values", {50, 100}},
      {"trials", 2},
      {"base_seed", 99},
      {"measurements",
       {{"grad0", true},
        {"coloring_ks", {2, 4}},
        {"concentration", {{"epsilon", 0.2}, {"subset_sizes", {10, 20}}}},
        {"degree_tail_thresholds", {8, 16}}}},
      {"caps", {{"delta_size_cap", 123}}}};
  write_text_file(path, j.dump());

  ExperimentConfig parsed = config_from_json_file(path);
  CHECK(parsed.name == c.name);
  CHECK(parsed.alpha == c.alpha);
  CHECK(parsed.n_values == c.n_values);
  CHECK(parsed.trials == c.trials);
  CHECK(parsed.base_seed == c.base_seed);
  CHECK(parsed.grad0 == true);
  CHECK(parsed.degeneracy == false);
  CHECK(parsed.coloring_ks == c.coloring_ks);
  REQUIRE(parsed.concentration.has_value());
  CHECK(parsed.concentration->subset_sizes == std::vector<int>{10, 20});
  CHECK(parsed.delta_size_cap == 123);
  CHECK(config_hash(parsed) == config_hash(c));

  SUBCASE("unknown keys are rejected") {
    j["extra"] = 1;
    write_text_file(path, j.dump());
    CHECK_THROWS_WITH_AS(config_from_json_file(path),
                         "unknown config key: extra", std::invalid_argument);
    j.erase("extra");
    j["measurements"]["typo"] = true;
    write_text_file(path, j.dump());
    CHECK_THROWS_WITH_AS(config_from_json_file(path),
                         "unknown config key: measurements.typo",
                         std::invalid_argument);
    j["measurements"].erase("typo");
    j["caps"]["typo"] = 1;
    write_text_file(path, j.dump());
    CHECK_THROWS_WITH_AS(config_from_json_file(path),
                         "unknown config key: caps.typo", std::invalid_argument);
  }
  SUBCASE("null concentration means none") {
    j["measurements"]["concentration"] = nullptr;
    write_text_file(path, j.dump());
    CHECK_FALSE(config_from_json_file(path).concentration.has_value());
  }
}

TEST_CASE("results land on disk with run metadata") {
  TempDir tmp;
  ExperimentConfig c;
  c.name = "disk";
  c.alpha = 1.5;
  c.beta = 0.2;
  c.gamma = 1.0;
  c.n_values = {25};
  c.trials = 2;
  c.base_seed = 42;
  c.degeneracy = true;
  ExperimentResult r = run_experiment(c);

  std::string dir = write_results(r, tmp.path.string());
  CHECK(dir.find("disk") != std::string::npos);
  REQUIRE(fs::exists(fs::path(dir) / "summary.csv"));
  REQUIRE(fs::exists(fs::path(dir) / "trials.json"));

  std::string csv = read_text_file((fs::path(dir) / "summary.csv").string());
  CHECK(csv.rfind("n,measurement,median,min,max\n", 0) == 0);
  CHECK(csv.find("25,degeneracy,") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(
      read_text_file((fs::path(dir) / "trials.json").string()));
  CHECK(j.at("code_version") == kCodeVersion);
  CHECK(j.at("config_hash") == r.config_hash);
  CHECK(j.at("regime") == "bounded_expansion_expected");
  CHECK(j.at("seed_derivation") == "trial_seed = base_seed + trial_index");
  CHECK(j.at("trial_seeds") == std::vector<std::uint64_t>{42, 43});
  REQUIRE(j.at("cells").size() == 1);
  CHECK(j["cells"][0]["measurement"] == "degeneracy");
  CHECK(j["cells"][0]["values"].size() == 2);
  CHECK(j.at("config").at("alpha") == 1.5);

  // a second write never clobbers the first
  std::string dir2 = write_results(r, tmp.path.string());
  CHECK(dir2 != dir);
  CHECK(read_text_file((fs::path(dir2) / "summary.csv").string()) == csv);
}

TEST_CASE("skipped cells serialize as gaps") {
  TempDir tmp;
  ExperimentConfig c;
  c.name = "gaps";
  c.n_values = {10};
  c.trials = 3;
  ExperimentResult r = run_experiment(c);
  CellValues cell;
  cell.n = 10;
  cell.measurement = "four_point_delta";
  cell.values = {std::optional<double>(1.5), std::nullopt, std::optional<double>(0.5)};
  r.cells.push_back(cell);
  CellValues all_skipped;
  all_skipped.n = 10;
  all_skipped.measurement = "grad0";
  all_skipped.values = {std::nullopt, std::nullopt, std::nullopt};
  r.cells.push_back(all_skipped);

  std::string dir = write_results(r, tmp.path.string());
  std::string csv = read_text_file((fs::path(dir) / "summary.csv").string());
  CHECK(csv.find("10,four_point_delta,1,0.5,1.5") != std::string::npos);
  CHECK(csv.find("10,grad0,,,\n") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(
      read_text_file((fs::path(dir) / "trials.json").string()));
  REQUIRE(j["cells"].size() == 2);
  CHECK(j["cells"][0]["values"][0] == 1.5);
  CHECK(j["cells"][0]["values"][1].is_null());
  CHECK(j["cells"][1]["values"][2].is_null());
}

TEST_CASE("experiment respects the delta size cap") {
  ExperimentConfig c;
  c.name = "capped";
  c.alpha = 1.0;
  c.beta = 1.0;
  c.gamma = 2.0;
  c.n_values = {400};
  c.trials = 2;
  c.base_seed = 19;
  c.four_point_delta = true;
  c.delta_size_cap = 30;  // giant is far larger; the ball keeps cells filled
  ExperimentResult r = run_experiment(c);
  for (const auto& v : r.cells[0].values) CHECK(v.has_value());
}
