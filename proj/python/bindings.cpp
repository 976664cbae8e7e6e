#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "plyforge/json_io.hpp"
#include "plyforge/logply.hpp"
#include "plyforge/lowerbound.hpp"
#include "plyforge/oneply.hpp"
#include "plyforge/ply.hpp"
#include "plyforge/svg.hpp"
#include "plyforge/tree.hpp"

namespace py = pybind11;
using namespace plyforge;

PYBIND11_MODULE(_core, m) {
  m.doc() = "low-ply tree drawing toolkit";

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Point{x, y}; }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<Drawing>(m, "Drawing")
      .def(py::init<>())
      .def_readwrite("alpha", &Drawing::alpha)
      .def_readwrite("positions", &Drawing::positions)
      .def_readwrite("edges", &Drawing::edges)
      .def("vertex_count", &Drawing::vertex_count)
      .def("validate", &Drawing::validate, py::arg("allow_alpha_override") = false)
      .def("to_json", [](const Drawing& d) { return drawing_to_json(d); });

  py::class_<PlyDisk>(m, "PlyDisk")
      .def_readonly("vertex", &PlyDisk::vertex)
      .def_readonly("center", &PlyDisk::center)
      .def_readonly("radius", &PlyDisk::radius);

  py::class_<PlyResult>(m, "PlyResult")
      .def_readonly("ply", &PlyResult::ply)
      .def_readonly("witness", &PlyResult::witness)
      .def_readonly("covering", &PlyResult::covering)
      .def_readonly("closed_ply", &PlyResult::closed_ply);

  py::class_<RootedTree>(m, "RootedTree")
      .def_readonly("root", &RootedTree::root)
      .def_readonly("degree_bound", &RootedTree::degree_bound)
      .def("size", &RootedTree::size)
      .def("degree", &RootedTree::degree)
      .def("max_degree", &RootedTree::max_degree)
      .def("depth", &RootedTree::depth)
      .def("subtree_size",
           [](const RootedTree& t, int v) { return t.nodes[v].subtree_size; })
      .def("children",
           [](const RootedTree& t, int v) { return t.nodes[v].children; })
      .def("parent", [](const RootedTree& t, int v) { return t.nodes[v].parent; })
      .def("validate",
           [](const RootedTree& t) {
             std::string why;
             bool ok = t.validate(&why);
             return std::make_pair(ok, why);
           })
      .def("to_json", [](const RootedTree& t) { return tree_to_json(t); });

  py::class_<HeavyPathDecomposition>(m, "HeavyPathDecomposition")
      .def_readonly("paths", &HeavyPathDecomposition::paths)
      .def_readonly("anchor", &HeavyPathDecomposition::anchor)
      .def_readonly("height", &HeavyPathDecomposition::height)
      .def_readonly("total_height", &HeavyPathDecomposition::total_height)
      .def_readonly("anchored_size", &HeavyPathDecomposition::anchored_size);

  py::class_<LowerBoundInstance>(m, "LowerBoundInstance")
      .def_readonly("h", &LowerBoundInstance::h)
      .def_readonly("m", &LowerBoundInstance::m)
      .def_readonly("apex", &LowerBoundInstance::apex)
      .def_readonly("vertex_count", &LowerBoundInstance::vertex_count)
      .def_readonly("tree_roots", &LowerBoundInstance::tree_roots)
      .def("edges", &LowerBoundInstance::edges)
      .def("to_json", [](const LowerBoundInstance& i) { return instance_to_json(i); });

  py::class_<Certificate> cert(m, "Certificate");
  cert.def_readonly("bound", &Certificate::bound)
      .def_readonly("tree_index", &Certificate::tree_index)
      .def_readonly("best_annulus", &Certificate::best_annulus)
      .def_readonly("covering_trees", &Certificate::covering_trees)
      .def_property_readonly("case", [](const Certificate& c) {
        return c.kind == Certificate::Case::apex_cover ? "apex_cover" : "annulus";
      });

  // generators
  m.def("complete_kary_tree", &complete_kary_tree, py::arg("k"), py::arg("height"));
  m.def("path_tree", &path_tree, py::arg("n"));
  m.def("star_tree", &star_tree, py::arg("leaves"));
  m.def("caterpillar_tree", &caterpillar_tree, py::arg("n"), py::arg("delta"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("delta"), py::arg("seed"));
  m.def("tree_from_json", &tree_from_json);
  m.def("drawing_from_json", &drawing_from_json);

  m.def("heavy_path_decompose", &heavy_path_decompose);

  // ply engine
  m.def("ply_disks", [](const Drawing& d) { return ply_disks(d).disks; });
  m.def("depth_at", [](const Point& q, const std::vector<PlyDisk>& disks) {
    auto r = depth_at(q, disks);
    return std::make_pair(r.count, r.covering);
  });
  m.def("ply_number_exact",
        [](const Drawing& d) { return ply_number_exact(d); });
  m.def("ply_number_exact_disks",
        [](const std::vector<PlyDisk>& disks) { return ply_number_exact(disks); });
  m.def("ply_number_sampled",
        [](const Drawing& d, double step) { return ply_number_sampled(d, step); },
        py::arg("drawing"), py::arg("grid_step"));
  m.def("area_ratio_lower_bound", &area_ratio_lower_bound);

  // layouts
  m.def("compute_f", &compute_f, py::arg("delta"), py::arg("manhattan") = false);
  m.def("compute_alpha_max", &compute_alpha_max, py::arg("delta"),
        py::arg("manhattan") = false);
  m.def(
      "layout_one_ply",
      [](const RootedTree& t, int delta, bool manhattan,
         std::optional<double> alpha, double root_edge_length) {
        return layout_one_ply(t, OnePlyParams::make(delta, manhattan, alpha),
                              root_edge_length);
      },
      py::arg("tree"), py::arg("delta"), py::arg("manhattan") = false,
      py::arg("alpha") = std::nullopt, py::arg("root_edge_length") = 1.0);
  m.def("layout_layered", &layout_layered, py::arg("tree"), py::arg("base") = 1.0);
  m.def("assemble_heavy_path_drawing", &assemble_heavy_path_drawing);
  m.def("layered_star_positions", &layered_star_positions);
  m.def("draw_path", [](const std::vector<long long>& sizes) {
    auto p = draw_path(sizes);
    return std::make_tuple(p.lengths, p.total_length(), p.is_two_drawing());
  });
  m.def("area_stats", [](const Drawing& d) {
    auto s = area_stats(d);
    return std::make_pair(s.edge_ratio, s.normalized_area);
  });

  // lower bound
  m.def("build_instance", &build_instance, py::arg("n_target"));
  m.def("build_instance_hm", &build_instance_hm, py::arg("h"), py::arg("m"));
  m.def("lemma5_check", &lemma5_check);
  m.def("certify_lower_bound", &certify_lower_bound);
  m.def("validate_two_tree_instance", [](const LowerBoundInstance& inst) {
    return validate_two_tree(inst.graph);
  });

  // rendering
  m.def(
      "render_svg",
      [](const Drawing& d, bool show_ply_disks, bool highlight_overlaps) {
        RenderOptions o;
        o.show_ply_disks = show_ply_disks;
        o.highlight_overlaps = highlight_overlaps;
        return render_svg(d, o);
      },
      py::arg("drawing"), py::arg("show_ply_disks") = true,
      py::arg("highlight_overlaps") = false);
}
