#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rig/coloring.hpp"
#include "rig/errors.hpp"
#include "rig/experiments.hpp"
#include "rig/hyperbolicity.hpp"
#include "rig/io.hpp"
#include "rig/model.hpp"
#include "rig/sparsity.hpp"

namespace {

void emit_json(const nlohmann::json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    rig::write_text_file(out_path, text);
}

struct GenerateArgs {
  int n = 0;
  int m = 0;
  double p = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  bool has_raw = false;     // --m/--p given
  bool has_scaling = false; // --alpha/--beta/--gamma given
};

int run(int argc, char** argv) {
  CLI::App app{"random intersection graph toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "sample a bipartite graph");
  generate->add_option("--n", gen.n, "number of nodes")->required();
  auto* opt_m = generate->add_option("--m", gen.m, "number of attributes");
  auto* opt_p = generate->add_option("--p", gen.p, "incidence probability");
  auto* opt_a = generate->add_option("--alpha", gen.alpha, "attribute exponent");
  auto* opt_b = generate->add_option("--beta", gen.beta, "attribute coefficient");
  auto* opt_g = generate->add_option("--gamma", gen.gamma, "probability coefficient");
  generate->add_option("--seed", gen.seed, "sampler seed");
  generate->add_option("-o", gen.out, "output bipartite file")->required();

  std::string project_in, project_out;
  CLI::App* project_cmd = app.add_subcommand("project", "project a bipartite graph");
  project_cmd->add_option("--bipartite", project_in, "input bipartite file")->required();
  project_cmd->add_option("-o", project_out, "output graph file")->required();

  std::string analyze_graph, analyze_bipartite, analyze_out;
  CLI::App* analyze = app.add_subcommand("analyze", "sparsity report");
  analyze->add_option("--graph", analyze_graph, "input graph file")->required();
  analyze->add_option("--bipartite", analyze_bipartite, "matching bipartite file");
  analyze->add_option("-o", analyze_out, "output JSON file (default stdout)");

  std::string color_graph, color_out;
  int color_k = 0;
  CLI::App* color = app.add_subcommand("color", "low-treewidth coloring");
  color->add_option("--graph", color_graph, "input graph file")->required();
  color->add_option("--k", color_k, "target parameter")->required();
  color->add_option("-o", color_out, "output JSON file (default stdout)");

  std::string hyp_graph, hyp_out;
  int hyp_cap = 600;
  CLI::App* hyp = app.add_subcommand("hyperbolicity", "four-point delta and certificates");
  hyp->add_option("--graph", hyp_graph, "input graph file")->required();
  hyp->add_option("--size-cap", hyp_cap, "delta measurement cap");
  hyp->add_option("-o", hyp_out, "output JSON file (default stdout)");

  std::string exp_preset, exp_config, exp_out = "results";
  CLI::App* experiment = app.add_subcommand("experiment", "run an experiment sweep");
  experiment->add_option("--preset", exp_preset, "preset name");
  experiment->add_option("--config", exp_config, "config JSON file");
  experiment->add_option("-o", exp_out, "output directory");

  std::string verify_graph, verify_coloring_path, verify_out;
  int verify_trials = 100, verify_cap = 30;
  std::uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "check a stored coloring");
  verify->add_option("--graph", verify_graph, "input graph file")->required();
  verify->add_option("--coloring", verify_coloring_path, "stored coloring JSON")->required();
  verify->add_option("--trials", verify_trials, "sampled subsets per class count");
  verify->add_option("--size-cap", verify_cap, "exact treewidth cap");
  verify->add_option("--seed", verify_seed, "subset sampling seed");
  verify->add_option("-o", verify_out, "output JSON file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (generate->parsed()) {
    gen.has_raw = opt_m->count() > 0 || opt_p->count() > 0;
    gen.has_scaling = opt_a->count() > 0 || opt_b->count() > 0 || opt_g->count() > 0;
    if (gen.has_raw == gen.has_scaling)
      throw std::invalid_argument("give either --m and --p, or --alpha, --beta and --gamma");
    rig::ModelParams params;
    if (gen.has_raw) {
      if (opt_m->count() == 0 || opt_p->count() == 0)
        throw std::invalid_argument("--m and --p go together");
      params = rig::make_params(gen.n, gen.m, gen.p, gen.seed);
    } else {
      if (opt_a->count() == 0 || opt_b->count() == 0 || opt_g->count() == 0)
        throw std::invalid_argument("--alpha, --beta and --gamma go together");
      params = rig::derive_params(gen.alpha, gen.beta, gen.gamma, gen.n, gen.seed);
    }
    rig::write_bipartite_file(rig::sample_bipartite(params), gen.out);
    return 0;
  }

  if (project_cmd->parsed()) {
    rig::write_graph_file(rig::project(rig::read_bipartite_file(project_in)), project_out);
    return 0;
  }

  if (analyze->parsed()) {
    rig::Graph g = rig::read_graph_file(analyze_graph);
    if (analyze_bipartite.empty()) {
      emit_json(rig::to_json(rig::sparsity_report(g)), analyze_out);
    } else {
      rig::BipartiteGraph b = rig::read_bipartite_file(analyze_bipartite);
      emit_json(rig::to_json(rig::sparsity_report(g, &b)), analyze_out);
    }
    return 0;
  }

  if (color->parsed()) {
    rig::Graph g = rig::read_graph_file(color_graph);
    rig::ColoringResult res = rig::low_tw_coloring(g, color_k);
    emit_json(rig::to_json(res), color_out);
    if (!color_out.empty())
      std::cout << g.n << ',' << res.k << ',' << res.num_colors << ','
                << res.augmentation_rounds << '\n';
    return 0;
  }

  if (hyp->parsed()) {
    rig::Graph g = rig::read_graph_file(hyp_graph);
    emit_json(rig::to_json(rig::hyperbolicity_report(g, hyp_cap)), hyp_out);
    return 0;
  }

  if (experiment->parsed()) {
    if (exp_preset.empty() == exp_config.empty())
      throw std::invalid_argument("give exactly one of --preset or --config");
    rig::ExperimentConfig config = exp_preset.empty()
                                       ? rig::config_from_json_file(exp_config)
                                       : rig::preset_config(exp_preset);
    rig::ExperimentResult result = rig::run_experiment(config);
    std::cout << rig::write_results(result, exp_out) << '\n';
    return 0;
  }

  if (verify->parsed()) {
    rig::Graph g = rig::read_graph_file(verify_graph);
    rig::ColoringResult stored =
        rig::coloring_from_json(nlohmann::json::parse(rig::read_text_file(verify_coloring_path)));
    std::vector<rig::VerificationRecord> records =
        rig::verify_coloring(g, stored, verify_trials, verify_cap, verify_seed);
    nlohmann::json arr = nlohmann::json::array();
    bool failed = false;
    for (const rig::VerificationRecord& rec : records) {
      arr.push_back(rig::to_json(rec));
      failed = failed || !rec.pass;
    }
    emit_json(arr, verify_out);
    return failed ? 3 : 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rig::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
