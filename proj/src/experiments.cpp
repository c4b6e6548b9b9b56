#include "rig/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "parallel.hpp"
#include "rig/coloring.hpp"
#include "rig/detail/random.hpp"
#include "rig/errors.hpp"
#include "rig/graph_core.hpp"
#include "rig/hyperbolicity.hpp"
#include "rig/io.hpp"
#include "rig/model.hpp"
#include "rig/sparsity.hpp"

namespace rig {

Regime regime_classifier(double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  return alpha <= 1 ? Regime::somewhere_dense_expected : Regime::bounded_expansion_expected;
}

std::string to_string(Regime r) {
  return r == Regime::somewhere_dense_expected ? "somewhere_dense_expected"
                                               : "bounded_expansion_expected";
}

namespace {

void require_increasing(const std::vector<int>& values, const char* what) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1])
      throw std::invalid_argument(std::string(what) + " must be strictly increasing");
}

void validate_config(const ExperimentConfig& c) {
  if (c.name.empty()) throw std::invalid_argument("config name is empty");
  for (char ch : c.name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.')
      throw std::invalid_argument("config name may use letters, digits, '.', '-', '_'");
  if (c.name[0] == '.') throw std::invalid_argument("config name may not start with '.'");
  regime_classifier(c.alpha);
  if (!(c.beta > 0) || !(c.gamma > 0))
    throw std::invalid_argument("beta and gamma must be positive");
  if (c.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (c.n_values.empty()) throw std::invalid_argument("n values list is empty");
  for (int n : c.n_values)
    if (n < 1) throw std::invalid_argument("n values must be positive");
  require_increasing(c.n_values, "n values");
  for (int k : c.coloring_ks)
    if (k < 1) throw std::invalid_argument("coloring k must be at least 1");
  require_increasing(c.coloring_ks, "coloring k list");
  if (c.concentration) {
    if (!(c.concentration->epsilon > 0) || !(c.concentration->epsilon < 1))
      throw std::invalid_argument("epsilon must be in (0, 1)");
    for (int s : c.concentration->subset_sizes)
      if (s < 1) throw std::invalid_argument("subset sizes must be positive");
    require_increasing(c.concentration->subset_sizes, "subset sizes");
  }
  for (int d : c.degree_tail_thresholds)
    if (d < 0) throw std::invalid_argument("degree thresholds must be nonnegative");
  require_increasing(c.degree_tail_thresholds, "degree thresholds");
  if (c.delta_size_cap < 4) throw std::invalid_argument("delta size cap must be at least 4");
}

struct TrialContext {
  const ExperimentConfig& config;
  std::uint64_t trial_seed = 0;
  ModelParams params;
  BipartiteGraph b;
  Graph g;
  std::optional<HyperbolicityReport> hyper;

  const HyperbolicityReport& report() {
    if (!hyper) hyper = hyperbolicity_report(g, config.delta_size_cap);
    return *hyper;
  }
};

using Measurement = std::pair<std::string, std::function<double(TrialContext&)>>;

std::vector<Measurement> measurement_plan(const ExperimentConfig& c) {
  std::vector<Measurement> plan;
  if (c.degeneracy)
    plan.emplace_back("degeneracy", [](TrialContext& t) {
      return static_cast<double>(core_decomposition(t.g).degeneracy);
    });
  if (c.max_attr_degree)
    plan.emplace_back("max_attr_degree", [](TrialContext& t) {
      return static_cast<double>(attribute_degree_stats(t.b).max_degree);
    });
  if (c.grad0)
    plan.emplace_back("grad0",
                      [](TrialContext& t) { return densest_subgraph(t.g).density.approx(); });
  if (c.four_point_delta)
    plan.emplace_back("four_point_delta",
                      [](TrialContext& t) { return t.report().four_point_delta.value(); });
  if (c.special_certificate)
    plan.emplace_back("special_certificate", [](TrialContext& t) {
      return static_cast<double>(t.report().certificate.value_or(0));
    });
  for (int k : c.coloring_ks)
    plan.emplace_back("coloring_k=" + std::to_string(k), [k](TrialContext& t) {
      return static_cast<double>(low_tw_coloring(t.g, k).num_colors);
    });
  if (c.concentration)
    for (int s : c.concentration->subset_sizes) {
      std::string name = "concentration_ok_s=" + std::to_string(s);
      double eps = c.concentration->epsilon;
      plan.emplace_back(name, [name, s, eps](TrialContext& t) {
        std::mt19937_64 rng(measurement_seed(t.trial_seed, name));
        std::vector<int> nodes = detail::sample_distinct(rng, t.b.n, s);
        ConcentrationCheck chk = concentration_check(t.b, nodes, t.params.p, eps);
        return chk.within_lower && chk.within_upper ? 1.0 : 0.0;
      });
    }
  for (int d : c.degree_tail_thresholds)
    plan.emplace_back("degree_tail_d=" + std::to_string(d), [d](TrialContext& t) {
      int thresholds[] = {d};
      return degree_tail(t.g, thresholds)[0];
    });
  return plan;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json meas;
  meas["degeneracy"] = c.degeneracy;
  meas["max_attr_degree"] = c.max_attr_degree;
  meas["grad0"] = c.grad0;
  meas["four_point_delta"] = c.four_point_delta;
  meas["special_certificate"] = c.special_certificate;
  meas["coloring_ks"] = c.coloring_ks;
  if (c.concentration)
    meas["concentration"] = {{"epsilon", c.concentration->epsilon},
                             {"subset_sizes", c.concentration->subset_sizes}};
  else
    meas["concentration"] = nullptr;
  meas["degree_tail_thresholds"] = c.degree_tail_thresholds;

  nlohmann::json j;
  j["name"] = c.name;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  j["n_values"] = c.n_values;
  j["trials"] = c.trials;
  j["base_seed"] = c.base_seed;
  j["measurements"] = meas;
  j["caps"] = {{"delta_size_cap", c.delta_size_cap}};
  return j;
}

std::string hex16(std::uint64_t v) {
  char buf[17] = {};
  for (int i = 15; i >= 0; --i, v >>= 4) buf[i] = "0123456789abcdef"[v & 0xf];
  return std::string(buf, 16);
}

}  // namespace

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig c;
  c.name = name;
  if (name == "fig-expdata-desk") {
    c.alpha = 1.5;
    c.beta = 0.1;
    c.gamma = 5;
    c.n_values = {500, 1000, 2000, 4000, 8000};
    c.trials = 10;
    c.base_seed = 7001;
    c.degeneracy = true;
    c.max_attr_degree = true;
    c.coloring_ks = {2, 3, 4, 5};
  } else if (name == "degen-alpha-0.5") {
    c.alpha = 0.5;
    c.beta = 1;
    c.gamma = 1;
    c.n_values = {1000, 4000, 16000};
    c.trials = 20;
    c.base_seed = 7002;
    c.degeneracy = true;
  } else if (name == "hyper-growth") {
    c.alpha = 1;
    c.beta = 2;
    c.gamma = 1.2;
    c.n_values = {500, 2000, 8000};
    c.trials = 10;
    c.base_seed = 7003;
    c.four_point_delta = true;
    c.special_certificate = true;
    c.delta_size_cap = 2000;  // a 600 ball plateaus before the growth shows
  } else if (name == "concentration-desk") {
    c.alpha = 1.5;
    c.beta = 0.1;
    c.gamma = 5;
    c.n_values = {5000};
    c.trials = 50;
    c.base_seed = 7118;
    c.concentration = ConcentrationSpec{0.1, {50}};
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return c;
}

std::vector<std::string> preset_names() {
  return {"fig-expdata-desk", "degen-alpha-0.5", "hyper-growth", "concentration-desk"};
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<Measurement> plan = measurement_plan(config);

  ExperimentResult r;
  r.config = config;
  r.config_hash = config_hash(config);
  for (int t = 0; t < config.trials; ++t)
    r.trial_seeds.push_back(config.base_seed + static_cast<std::uint64_t>(t));

  for (int n : config.n_values) {
    std::size_t first_cell = r.cells.size();
    for (const Measurement& m : plan) {
      CellValues cell;
      cell.n = n;
      cell.measurement = m.first;
      cell.values.resize(config.trials);
      r.cells.push_back(std::move(cell));
    }
    detail::parallel_for(0, config.trials, [&](int t) {
      TrialContext ctx{config};
      ctx.trial_seed = r.trial_seeds[t];
      ctx.params = derive_params(config.alpha, config.beta, config.gamma, n, ctx.trial_seed);
      ctx.b = sample_bipartite(ctx.params);
      ctx.g = project(ctx.b);
      for (std::size_t i = 0; i < plan.size(); ++i) {
        try {
          r.cells[first_cell + i].values[t] = plan[i].second(ctx);
        } catch (const CapExceeded&) {
          // leave the cell skipped; the sweep goes on
        }
      }
    });
  }
  return r;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

std::uint64_t measurement_seed(std::uint64_t trial_seed, const std::string& measurement) {
  return detail::fnv1a(measurement, detail::fnv1a_u64(trial_seed));
}

std::string config_hash(const ExperimentConfig& c) {
  return "fnv1a:" + hex16(detail::fnv1a(config_to_json(c).dump()));
}

ExperimentConfig config_from_json_file(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(path));
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "name")
      c.name = value.get<std::string>();
    else if (key == "alpha")
      c.alpha = value.get<double>();
    else if (key == "beta")
      c.beta = value.get<double>();
    else if (key == "gamma")
      c.gamma = value.get<double>();
    else if (key == "n_values")
      c.n_values = value.get<std::vector<int>>();
    else if (key == "trials")
      c.trials = value.get<int>();
    else if (key == "base_seed")
      c.base_seed = value.get<std::uint64_t>();
    else if (key == "caps") {
      for (const auto& [ck, cv] : value.items()) {
        if (ck == "delta_size_cap")
          c.delta_size_cap = cv.get<int>();
        else
          throw std::invalid_argument("unknown config key: caps." + ck);
      }
    } else if (key == "measurements") {
      for (const auto& [mk, mv] : value.items()) {
        if (mk == "degeneracy")
          c.degeneracy = mv.get<bool>();
        else if (mk == "max_attr_degree")
          c.max_attr_degree = mv.get<bool>();
        else if (mk == "grad0")
          c.grad0 = mv.get<bool>();
        else if (mk == "four_point_delta")
          c.four_point_delta = mv.get<bool>();
        else if (mk == "special_certificate")
          c.special_certificate = mv.get<bool>();
        else if (mk == "coloring_ks")
          c.coloring_ks = mv.get<std::vector<int>>();
        else if (mk == "concentration") {
          if (!mv.is_null())
            c.concentration = ConcentrationSpec{mv.at("epsilon").get<double>(),
                                                mv.at("subset_sizes").get<std::vector<int>>()};
        } else if (mk == "degree_tail_thresholds")
          c.degree_tail_thresholds = mv.get<std::vector<int>>();
        else
          throw std::invalid_argument("unknown config key: measurements." + mk);
      }
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  validate_config(c);
  return c;
}

std::string write_results(const ExperimentResult& r, const std::string& out_dir) {
  validate_config(r.config);
  namespace fs = std::filesystem;
  fs::path base = fs::path(out_dir) / r.config.name;

  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc = {};
  gmtime_r(&now, &tm_utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%d-%H%M%S", &tm_utc);

  fs::path dir = base / stamp;
  for (int i = 1; fs::exists(dir); ++i)
    dir = base / (std::string(stamp) + "-" + std::to_string(i));
  fs::create_directories(dir);

  std::string csv = "n,measurement,median,min,max\n";
  for (const CellValues& cell : r.cells) {
    std::vector<double> present;
    for (const auto& v : cell.values)
      if (v) present.push_back(*v);
    csv += std::to_string(cell.n) + "," + cell.measurement + ",";
    if (!present.empty()) {
      auto [lo, hi] = std::minmax_element(present.begin(), present.end());
      csv += format_double(median(present)) + "," + format_double(*lo) + "," + format_double(*hi);
    } else {
      csv += ",,";
    }
    csv += "\n";
  }
  write_text_file((dir / "summary.csv").string(), csv);

  nlohmann::json j;
  j["code_version"] = kCodeVersion;
  j["config"] = config_to_json(r.config);
  j["config_hash"] = r.config_hash;
  j["regime"] = to_string(regime_classifier(r.config.alpha));
  j["seed_derivation"] = "trial_seed = base_seed + trial_index";
  j["trial_seeds"] = r.trial_seeds;
  nlohmann::json cells = nlohmann::json::array();
  for (const CellValues& cell : r.cells) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : cell.values) {
      if (v)
        values.push_back(*v);
      else
        values.push_back(nullptr);
    }
    cells.push_back({{"n", cell.n}, {"measurement", cell.measurement}, {"values", values}});
  }
  j["cells"] = cells;
  write_text_file((dir / "trials.json").string(), j.dump(2) + "\n");
  return dir.string();
}

}  // namespace rig
