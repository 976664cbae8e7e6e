// plyforge: construct, measure and render low-ply tree drawings.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "plyforge/json_io.hpp"
#include "plyforge/logply.hpp"
#include "plyforge/lowerbound.hpp"
#include "plyforge/oneply.hpp"
#include "plyforge/ply.hpp"
#include "plyforge/svg.hpp"
#include "plyforge/tree.hpp"

namespace {

using namespace plyforge;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

int run(int argc, char** argv) {
  CLI::App app{"low-ply tree drawing toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a tree or 2-tree instance");
  std::string family = "complete_kary", gen_out;
  int gen_k = 2, gen_height = 3, gen_n = 100, gen_delta = 4;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", family, "complete_kary|random|path|caterpillar|star|lowerbound")
      ->check(CLI::IsMember({"complete_kary", "random", "path", "caterpillar",
                             "star", "lowerbound"}));
  gen->add_option("--k", gen_k, "branching factor (complete_kary)");
  gen->add_option("--height", gen_height, "tree height (complete_kary)");
  gen->add_option("--n", gen_n, "vertex count / lower-bound size target");
  gen->add_option("--delta", gen_delta, "degree bound (random, caterpillar)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "heavy path decomposition JSON");
  std::string dec_in, dec_out;
  dec->add_option("--in", dec_in, "tree JSON (default stdin)");
  dec->add_option("--out", dec_out, "output path (default stdout)");

  // layout
  auto* lay = app.add_subcommand("layout", "draw a tree");
  std::string algo = "oneply", lay_in, lay_out;
  int lay_delta = 0;
  bool manhattan = false;
  double root_edge = 1.0;
  std::optional<double> lay_alpha;
  lay->add_option("--algorithm", algo, "oneply|layered|heavypath")
      ->check(CLI::IsMember({"oneply", "layered", "heavypath"}));
  lay->add_option("--delta", lay_delta, "wedge count for oneply (default: tree max degree)");
  lay->add_flag("--manhattan", manhattan, "delta=4 axis-parallel refinement");
  lay->add_option("--alpha", lay_alpha, "ply ratio stored in the drawing");
  lay->add_option("--root-edge-length", root_edge, "oneply root edge length");
  lay->add_option("--in", lay_in, "tree JSON (default stdin)");
  lay->add_option("--out", lay_out, "output path (default stdout)");

  // ply
  auto* ply = app.add_subcommand("ply", "measure the ply number of a drawing");
  std::string ply_in, ply_method = "exact";
  double grid_step = 0.0;
  std::optional<double> ply_alpha;
  ply->add_option("--in", ply_in, "drawing JSON (default stdin)");
  ply->add_option("--method", ply_method, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  ply->add_option("--grid-step", grid_step, "grid step for --method sampled");
  ply->add_option("--alpha", ply_alpha, "override the drawing's alpha");

  // bound
  auto* bound = app.add_subcommand("bound", "lower-bound certificate for a drawing");
  std::string certify_path, instance_path;
  bound->add_option("--certify", certify_path, "drawing JSON of a lower-bound instance")
      ->required();
  bound->add_option("--instance", instance_path, "instance JSON")->required();

  // render
  auto* ren = app.add_subcommand("render", "render a drawing to SVG");
  std::string ren_in, ren_out;
  RenderOptions ropts;
  bool no_disks = false;
  ren->add_option("--in", ren_in, "drawing JSON (default stdin)");
  ren->add_option("--out", ren_out, "SVG output path (default stdout)");
  ren->add_flag("--show-ply-disks", ropts.show_ply_disks, "draw the ply disks");
  ren->add_flag("--no-ply-disks", no_disks, "omit the ply disks");
  ren->add_flag("--highlight-overlaps", ropts.highlight_overlaps,
                "shade sampled cells with depth >= 2");
  ren->add_option("--canvas-size", ropts.canvas_size, "canvas size in px");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 1;
  }

  if (*gen) {
    if (family == "lowerbound") {
      emit(gen_out, instance_to_json(build_instance(gen_n)) + "\n");
      return 0;
    }
    RootedTree t;
    if (family == "complete_kary") t = complete_kary_tree(gen_k, gen_height);
    else if (family == "random") t = random_tree(gen_n, gen_delta, gen_seed);
    else if (family == "path") t = path_tree(gen_n);
    else if (family == "caterpillar") t = caterpillar_tree(gen_n, gen_delta);
    else t = star_tree(gen_n);
    emit(gen_out, tree_to_json(t) + "\n");
  } else if (*dec) {
    auto t = tree_from_json(slurp(dec_in));
    emit(dec_out, decomposition_to_json(heavy_path_decompose(t)) + "\n");
  } else if (*lay) {
    auto t = tree_from_json(slurp(lay_in));
    Drawing d;
    if (algo == "oneply") {
      int delta = lay_delta > 0 ? lay_delta : std::max(t.max_degree(), 3);
      d = layout_one_ply(t, OnePlyParams::make(delta, manhattan, lay_alpha),
                         root_edge);
    } else if (algo == "layered") {
      d = layout_layered(t);
      if (lay_alpha) d.alpha = *lay_alpha;
    } else {
      d = assemble_heavy_path_drawing(t);
      if (lay_alpha) d.alpha = *lay_alpha;
    }
    emit(lay_out, drawing_to_json(d) + "\n");
  } else if (*ply) {
    auto d = drawing_from_json(slurp(ply_in));
    if (ply_alpha) d.alpha = *ply_alpha;
    nlohmann::json out;
    out["method"] = ply_method;
    if (ply_method == "exact") {
      auto r = ply_number_exact(d);
      out["ply"] = r.ply;
      out["witness"] = {r.witness.x, r.witness.y};
      out["closed_ply"] = r.closed_ply;
    } else {
      if (grid_step <= 0.0)
        throw std::invalid_argument("ply: --grid-step must be > 0 for sampled");
      out["ply"] = ply_number_sampled(d, grid_step);
      out["witness"] = nullptr;
    }
    std::cout << out.dump() << "\n";
  } else if (*bound) {
    auto d = drawing_from_json(read_file(certify_path));
    auto inst = instance_from_json(read_file(instance_path));
    auto cert = certify_lower_bound(d, inst);
    nlohmann::json out{
        {"bound", cert.bound},
        {"case", cert.kind == Certificate::Case::apex_cover ? "apex_cover"
                                                            : "annulus"},
        {"covering_trees", cert.covering_trees},
        {"tree_index", cert.tree_index},
        {"best_annulus", cert.best_annulus}};
    std::cout << out.dump() << "\n";
  } else if (*ren) {
    auto d = drawing_from_json(slurp(ren_in));
    if (no_disks) ropts.show_ply_disks = false;
    emit(ren_out, render_svg(d, ropts));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const plyforge::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
