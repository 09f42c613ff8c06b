// eulermerge: simplify set systems into wellformed Euler diagrams.
//
//   eulermerge simplify data/running_example.txt --out final.json --log merges.json
//   eulermerge render data/running_example.txt --out diagram.svg --seed 1
//   eulermerge stats corpus/ --csv stats.csv

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "eulermerge/error.hpp"
#include "eulermerge/layout.hpp"
#include "eulermerge/merge_engine.hpp"
#include "eulermerge/planarity.hpp"
#include "eulermerge/render.hpp"
#include "eulermerge/set_system.hpp"
#include "eulermerge/stats.hpp"
#include "eulermerge/svg.hpp"

namespace em = eulermerge;

namespace {

enum class Stage { kInitial, kPlanar, kFinal };

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw em::Error("cannot write " + path);
  out << content;
  if (!out) throw em::Error("failed writing " + path);
}

struct Common {
  std::string input;
  em::InputFormat format = em::InputFormat::kAuto;
  bool genus_removal = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("input", input, "Set system file")->required()->check(CLI::ExistingFile);
    cmd.add_option("--format", format, "Input format (default: detect)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, em::InputFormat>{{"lines", em::InputFormat::kLines},
                                                   {"structured", em::InputFormat::kStructured}},
            CLI::ignore_case));
    cmd.add_flag("--genus-removal", genus_removal, "Also merge sets to remove diagram genus");
  }
};

// The dual graph at the requested pipeline stage, with the merges that led there.
em::MergeResult run_to(const em::SetSystem& system, Stage stage, bool genus_removal) {
  auto initial = em::initial_dual_graph(system);
  if (stage == Stage::kInitial) return {std::move(initial), {}};
  if (stage == Stage::kPlanar) return em::nonplanar_to_planar(std::move(initial));
  return em::euler_merge(system, em::EulerMergeOptions{genus_removal});
}

int simplify(const Common& common, const std::string& out, const std::string& log_path,
             bool table) {
  auto system = em::load_set_system(common.input, common.format);
  auto result = em::euler_merge(system, em::EulerMergeOptions{common.genus_removal});
  if (!out.empty()) write_file(out, em::to_json(result.graph));
  if (!log_path.empty()) write_file(log_path, em::to_json(result.log));
  if (table) std::cout << em::to_table(result.log);
  std::cout << "planarity=" << result.log.count(em::MergeReason::kPlanarity)
            << " concurrency=" << result.log.count(em::MergeReason::kConcurrency);
  if (common.genus_removal) std::cout << " genus=" << result.log.count(em::MergeReason::kGenus);
  std::cout << " zones=" << result.graph.zone_count() << "\n";
  return 0;
}

struct RenderFlags {
  std::string out;
  std::string sidecar;
  Stage stage = Stage::kFinal;
  std::uint64_t seed = 1;
  double width = 900.0;
  double height = 600.0;
  int layout_iterations = 500;
  int smooth_iterations = 100;
  bool show_dual = false;
  bool no_fill = false;
};

int render(const Common& common, const RenderFlags& flags) {
  auto system = em::load_set_system(common.input, common.format);
  auto graph = run_to(system, flags.stage, common.genus_removal).graph;
  if (!em::is_planar(graph).planar)
    throw em::Error("the dual graph at this stage is nonplanar and cannot be drawn");

  em::RefineOptions refine;
  refine.seed = flags.seed;
  refine.iterations = flags.layout_iterations;
  auto layout = em::refine_layout(graph, em::planar_layout(graph), refine);

  em::RouteOptions route;
  route.allow_concurrency = flags.stage != Stage::kFinal;
  em::SmoothOptions smooth;
  smooth.iterations = flags.smooth_iterations;
  auto diagram = em::smooth_curves(em::route_curves(graph, layout, route), smooth);

  em::SvgOptions svg;
  svg.width = flags.width;
  svg.height = flags.height;
  svg.fill = !flags.no_fill;
  svg.show_dual = flags.show_dual;
  svg.names = system.names();
  write_file(flags.out, em::emit_svg(diagram, svg));
  if (!flags.sidecar.empty()) write_file(flags.sidecar, em::diagram_to_json(diagram));
  std::cout << "curves=" << diagram.curves.size() << " zones=" << graph.zone_count() << "\n";
  return 0;
}

int stats(const std::string& dir, em::InputFormat format, bool genus_removal,
          const std::string& csv) {
  auto run = em::evaluate_collection(dir, format, em::EulerMergeOptions{genus_removal});
  for (const auto& f : run.failures) std::cerr << "eulermerge: skipped " << f << "\n";
  auto table = em::to_csv(run);
  if (csv.empty())
    std::cout << table;
  else
    write_file(csv, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplify set systems into wellformed Euler diagrams by merging sets"};
  app.require_subcommand(1);

  Common simplify_common;
  std::string simplify_out;
  std::string simplify_log;
  bool simplify_table = false;
  auto* simplify_cmd = app.add_subcommand("simplify", "Run the merge pipeline and report merges");
  simplify_common.add_to(*simplify_cmd);
  simplify_cmd->add_option("--out", simplify_out, "Write the final dual graph (JSON)");
  simplify_cmd->add_option("--log", simplify_log, "Write the merge log (JSON)");
  simplify_cmd->add_flag("--table", simplify_table, "Print the merge log as a table");

  Common render_common;
  RenderFlags flags;
  auto* render_cmd = app.add_subcommand("render", "Draw the Euler diagram as SVG");
  render_common.add_to(*render_cmd);
  render_cmd->add_option("--out", flags.out, "SVG output path")->required();
  render_cmd->add_option("--sidecar", flags.sidecar, "Write curve coordinates (JSON)");
  render_cmd->add_option("--stage", flags.stage, "Pipeline stage to draw")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Stage>{
              {"initial", Stage::kInitial}, {"planar", Stage::kPlanar}, {"final", Stage::kFinal}},
          CLI::ignore_case));
  render_cmd->add_option("--seed", flags.seed, "Layout seed");
  render_cmd->add_option("--width", flags.width, "Canvas width")->check(CLI::PositiveNumber);
  render_cmd->add_option("--height", flags.height, "Canvas height")->check(CLI::PositiveNumber);
  render_cmd->add_option("--layout-iterations", flags.layout_iterations, "Force-directed refinement iterations")->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--smooth-iterations", flags.smooth_iterations, "Curve smoothing iterations")->check(CLI::NonNegativeNumber);
  render_cmd->add_flag("--show-dual", flags.show_dual, "Draw the dual graph under the curves");
  render_cmd->add_flag("--no-fill", flags.no_fill, "Outline curves only");

  std::string stats_dir;
  std::string stats_csv;
  em::InputFormat stats_format = em::InputFormat::kAuto;
  bool stats_genus = false;
  auto* stats_cmd = app.add_subcommand("stats", "Merge statistics over a directory of set systems");
  stats_cmd->add_option("dir", stats_dir, "Collection directory")->required()->check(CLI::ExistingDirectory);
  stats_cmd->add_option("--csv", stats_csv, "Write the table here instead of stdout");
  stats_cmd->add_option("--format", stats_format, "Input format (default: detect)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, em::InputFormat>{{"lines", em::InputFormat::kLines},
                                                 {"structured", em::InputFormat::kStructured}},
          CLI::ignore_case));
  stats_cmd->add_flag("--genus-removal", stats_genus, "Also merge sets to remove diagram genus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simplify_cmd) return simplify(simplify_common, simplify_out, simplify_log, simplify_table);
    if (*render_cmd) return render(render_common, flags);
    if (*stats_cmd) return stats(stats_dir, stats_format, stats_genus, stats_csv);
  } catch (const std::exception& e) {
    std::cerr << "eulermerge: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
