#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "strata/embed/document.hpp"
#include "strata/embed/link.hpp"
#include "strata/embed/skipgram.hpp"
#include "strata/error.hpp"
#include "strata/eval/config.hpp"
#include "strata/eval/experiment.hpp"
#include "strata/eval/metrics.hpp"
#include "strata/eval/render.hpp"
#include "strata/foa/run.hpp"
#include "strata/kg/document.hpp"
#include "strata/nal/engine.hpp"
#include "strata/nal/rules.hpp"
#include "strata/scene/document.hpp"
#include "strata/scene/generator.hpp"
#include "strata/spatial/extract.hpp"
#include "strata/spatial/premises.hpp"

namespace {

using namespace strata;

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

int cmd_gen(const std::string& config, std::uint64_t seed, const std::string& out,
            const std::string& gt_out) {
  auto cfg = config.empty() ? scene::GenConfig{} : eval::load_gen_config(read_file(config));
  cfg.rng_seed = seed;
  const auto [s, gt] = scene::generate_scene(cfg);
  write_file(out, scene::save_scene(s));
  write_file(gt_out, scene::save_ground_truth(gt));
  return 0;
}

int cmd_relations(const std::string& scene_path, const std::string& tol_path,
                  const std::string& out, const std::string& premises) {
  const auto s = scene::load_scene(read_file(scene_path));
  const auto tol = tol_path.empty() ? spatial::Tolerances{} : eval::load_tolerances(read_file(tol_path));
  const auto graph = spatial::extract_relations(s, tol);
  write_file(out, kg::serialize(graph));
  if (!premises.empty()) write_file(premises, spatial::to_premises(graph));
  return 0;
}

int cmd_reason(const std::string& scene_path, bool use_foa, std::size_t k,
               const std::string& rules_path, const std::string& out, const std::string& stats) {
  const auto s = scene::load_scene(read_file(scene_path));
  const auto rules = rules_path.empty() ? nal::default_rules() : nal::parse_rules(read_file(rules_path));
  foa::FoAConfig cfg;
  cfg.K = k;
  cfg.check();
  const auto [labeling, run_stats] = foa::run(s, {}, rules, cfg, use_foa);
  write_file(out, nal::save_labeling(labeling));
  if (!stats.empty()) write_file(stats, foa::save_stats(run_stats));
  return 0;
}

int cmd_eval(const std::string& pred, const std::string& gt, const std::string& out) {
  const auto m = eval::score(nal::load_labeling(read_file(pred)),
                             scene::load_ground_truth(read_file(gt)));
  write_file(out, eval::save_metrics(m));
  return 0;
}

int cmd_experiment(const std::string& config, const std::string& out) {
  const auto cfg = config.empty() ? eval::ExperimentConfig{}
                                  : eval::load_experiment_config(read_file(config));
  write_file(out, eval::save_report(eval::run_experiment(cfg)));
  return 0;
}

int cmd_embed(const std::string& graph_path, double p, double q, int dim, std::uint64_t seed,
              int walks, int length, int epochs, const std::string& out) {
  const auto graph = kg::deserialize(read_file(graph_path));
  embed::WalkConfig wc;
  wc.p = p;
  wc.q = q;
  wc.rng_seed = seed;
  wc.num_walks = walks;
  wc.walk_length = length;
  embed::TrainConfig tc;
  tc.dim = dim;
  tc.epochs = epochs;
  tc.rng_seed = seed;
  write_file(out, embed::save_embedding(embed::embed_graph(graph, wc, tc)));
  return 0;
}

int cmd_predict_links(const std::string& emb, const std::string& n1, const std::string& n2,
                      double eps, double gamma, double max_eps, const std::string& out) {
  const auto space = embed::load_embedding(read_file(emb));
  const auto report = embed::predict_links(space, n1, n2, eps, gamma, max_eps);
  write_file(out, embed::save_link_report(report));
  if (report.guard_tripped) {
    std::cerr << "strata: eps reached " << report.eps_final << " with an empty quarter\n";
    return kExitGuard;
  }
  return 0;
}

int cmd_render(const std::string& scene_path, const std::string& labeling,
               const std::string& gt_path, const std::string& out) {
  const auto s = scene::load_scene(read_file(scene_path));
  const auto l = nal::load_labeling(read_file(labeling));
  if (gt_path.empty()) {
    write_file(out, eval::render(s, l));
  } else {
    const auto gt = scene::load_ground_truth(read_file(gt_path));
    write_file(out, eval::render(s, l, &gt));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strata: leveled knowledge graphs and retail-shelf scene reasoning"};
  app.require_subcommand(1);
  int rc = 0;

  std::string config, out, gt, scene_path, tol, premises, rules, stats, pred, graph, emb, n1, n2,
      labeling;
  std::uint64_t seed = 0;
  bool use_foa = false;
  std::size_t k = foa::FoAConfig{}.K;
  double p = 1.0, q = 1.0, eps = 0.1, gamma = 0.05, max_eps = -1.0;
  int dim = 2, walks = embed::WalkConfig{}.num_walks, length = embed::WalkConfig{}.walk_length,
      epochs = embed::TrainConfig{}.epochs;

  auto* gen = app.add_subcommand("gen", "generate a synthetic shelf scene");
  gen->add_option("--config", config, "generator config (JSON)");
  gen->add_option("--seed", seed, "rng seed")->required();
  gen->add_option("--out", out, "scene document")->required();
  gen->add_option("--gt", gt, "ground-truth document")->required();
  gen->callback([&] { rc = cmd_gen(config, seed, out, gt); });

  auto* rel = app.add_subcommand("relations", "extract the L1 relation graph");
  rel->add_option("--scene", scene_path)->required();
  rel->add_option("--tol", tol, "tolerances (JSON)");
  rel->add_option("--out", out, "graph document")->required();
  rel->add_option("--premises", premises, "premise text");
  rel->callback([&] { rc = cmd_relations(scene_path, tol, out, premises); });

  auto* reason = app.add_subcommand("reason", "label rects as shelf/product/other");
  reason->add_option("--scene", scene_path)->required();
  reason->add_flag("--foa", use_foa, "reason per focus-of-attention cover");
  reason->add_option("--k", k, "cover size cap");
  reason->add_option("--rules", rules, "rule file");
  reason->add_option("--out", out, "labeling document")->required();
  reason->add_option("--stats", stats, "run statistics");
  reason->callback([&] { rc = cmd_reason(scene_path, use_foa, k, rules, out, stats); });

  auto* ev = app.add_subcommand("eval", "score a labeling against ground truth");
  ev->add_option("--pred", pred)->required();
  ev->add_option("--gt", gt)->required();
  ev->add_option("--out", out)->required();
  ev->callback([&] { rc = cmd_eval(pred, gt, out); });

  auto* exp = app.add_subcommand("experiment", "settings x trials, with and without FoA");
  exp->add_option("--config", config, "experiment config (JSON)");
  exp->add_option("--out", out)->required();
  exp->callback([&] { rc = cmd_experiment(config, out); });

  auto* em = app.add_subcommand("embed", "random-walk node embedding of a graph");
  em->add_option("--graph", graph)->required();
  em->add_option("--p", p, "return parameter");
  em->add_option("--q", q, "in-out parameter");
  em->add_option("--dim", dim);
  em->add_option("--seed", seed);
  em->add_option("--walks", walks, "walks per node");
  em->add_option("--length", length, "walk length");
  em->add_option("--epochs", epochs);
  em->add_option("--out", out)->required();
  em->callback([&] { rc = cmd_embed(graph, p, q, dim, seed, walks, length, epochs, out); });

  auto* pl = app.add_subcommand("predict-links", "nodes near the segment between two nodes");
  pl->add_option("--emb", emb)->required();
  pl->add_option("--n1", n1)->required();
  pl->add_option("--n2", n2)->required();
  pl->add_option("--eps", eps)->required();
  pl->add_option("--gamma", gamma)->required();
  pl->add_option("--max-eps", max_eps, "growth limit (default: embedding diameter)");
  pl->add_option("--out", out)->required();
  pl->callback([&] { rc = cmd_predict_links(emb, n1, n2, eps, gamma, max_eps, out); });

  auto* rd = app.add_subcommand("render", "SVG of a labeled scene");
  rd->add_option("--scene", scene_path)->required();
  rd->add_option("--labeling", labeling)->required();
  rd->add_option("--gt", gt);
  rd->add_option("--out", out)->required();
  rd->callback([&] { rc = cmd_render(scene_path, labeling, gt, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const Error& e) {
    std::cerr << "strata: " << e.what() << '\n';
    return e.code() == ErrorCode::NonConvergence ? kExitGuard : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "strata: " << e.what() << '\n';
    return kExitInput;
  }
  return rc;
}
