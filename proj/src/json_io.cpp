#include "plyforge/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace plyforge {

using nlohmann::json;

namespace {

json parse_checked(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + " JSON: " + e.what());
  }
}

}  // namespace

std::string tree_to_json(const RootedTree& tree) {
  json nodes = json::array();
  for (int v = 0; v < tree.size(); ++v)
    nodes.push_back({{"id", v}, {"children", tree.nodes[v].children}});
  json out{{"root", tree.root}, {"nodes", nodes}};
  if (tree.degree_bound > 0) out["degree_bound"] = tree.degree_bound;
  return out.dump(2);
}

RootedTree tree_from_json(const std::string& text) {
  json j = parse_checked(text, "tree");
  if (!j.contains("root") || !j.contains("nodes"))
    throw std::invalid_argument("tree JSON: missing 'root' or 'nodes'");
  RootedTree t;
  try {
    t.nodes.resize(j["nodes"].size());
    t.root = j["root"].get<int>();
    t.degree_bound = j.value("degree_bound", 0);
    if (t.size() == 0) throw std::invalid_argument("tree JSON: no nodes");
    if (t.root < 0 || t.root >= t.size())
      throw std::invalid_argument("tree JSON: root id out of range");
    for (const auto& node : j["nodes"]) {
      int id = node.at("id").get<int>();
      if (id < 0 || id >= t.size())
        throw std::invalid_argument("tree JSON: node id out of range");
      for (int c : node.at("children").get<std::vector<int>>()) {
        if (c < 0 || c >= t.size())
          throw std::invalid_argument("tree JSON: child id out of range");
        // Guard the traversal below against cycles: every node has at most
        // one parent, nobody is its own child, the root is nobody's child.
        if (c == id || c == t.root || t.nodes[c].parent != -1)
          throw std::invalid_argument(
              "tree JSON: node " + std::to_string(c) +
              " cannot be a child here (cycle or duplicate parent)");
        t.nodes[id].children.push_back(c);
        t.nodes[c].parent = id;
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("tree JSON: ") + e.what());
  }
  t.recompute_subtree_sizes();
  std::string why;
  if (!t.validate(&why)) throw std::invalid_argument("tree JSON: " + why);
  return t;
}

std::string drawing_to_json(const Drawing& d) {
  json vertices = json::array();
  for (int v = 0; v < d.vertex_count(); ++v)
    vertices.push_back(
        {{"id", v}, {"x", d.positions[v].x}, {"y", d.positions[v].y}});
  json edges = json::array();
  for (const auto& [a, b] : d.edges) edges.push_back({a, b});
  return json{{"alpha", d.alpha}, {"vertices", vertices}, {"edges", edges}}
      .dump(2);
}

Drawing drawing_from_json(const std::string& text) {
  json j = parse_checked(text, "drawing");
  if (!j.is_object())
    throw std::invalid_argument("drawing JSON: expected an object");
  for (const char* key : {"alpha", "vertices", "edges"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("drawing JSON: missing '") +
                                  key + "'");
  Drawing d;
  try {
    d.alpha = j["alpha"].get<double>();
    d.positions.resize(j["vertices"].size());
    for (const auto& v : j["vertices"]) {
      int id = v.at("id").get<int>();
      if (id < 0 || id >= d.vertex_count())
        throw std::invalid_argument("drawing JSON: vertex id out of range");
      d.positions[id] = {v.at("x").get<double>(), v.at("y").get<double>()};
    }
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("drawing JSON: edge must be a pair");
      d.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("drawing JSON: ") + e.what());
  }
  if (d.positions.empty())
    throw std::invalid_argument("drawing JSON: no vertices");
  d.validate(true);
  return d;
}

std::string decomposition_to_json(const HeavyPathDecomposition& hpd) {
  json paths = json::array();
  for (std::size_t p = 0; p < hpd.paths.size(); ++p)
    paths.push_back({{"vertices", hpd.paths[p]},
                     {"anchor", hpd.anchor[p]},
                     {"height", hpd.height[p]},
                     {"parent_path", hpd.parent_path[p]}});
  json anchored = json::array();
  for (std::size_t v = 0; v < hpd.anchored_size.size(); ++v)
    anchored.push_back(hpd.anchored_size[v]);
  return json{{"paths", paths},
              {"total_height", hpd.total_height},
              {"anchored_size", anchored}}
      .dump(2);
}

std::string instance_to_json(const LowerBoundInstance& inst) {
  json order = json::array();
  for (const auto& a : inst.graph.order)
    order.push_back({a.vertex, a.parent1, a.parent2});
  json edges = json::array();
  for (const auto& [a, b] : inst.edges()) edges.push_back({a, b});
  return json{{"family", "lowerbound"},
              {"n_target", inst.n_target},
              {"h", inst.h},
              {"m", inst.m},
              {"apex", inst.apex},
              {"vertex_count", inst.vertex_count},
              {"base_edge", {inst.graph.base_edge.first, inst.graph.base_edge.second}},
              {"construction_order", order},
              {"edges", edges}}
      .dump(2);
}

LowerBoundInstance instance_from_json(const std::string& text) {
  json j = parse_checked(text, "instance");
  if (!j.is_object() || !j.contains("h") || !j.contains("m"))
    throw std::invalid_argument("instance JSON: missing 'h' or 'm'");
  try {
    auto inst = build_instance_hm(j["h"].get<int>(), j["m"].get<int>());
    inst.n_target = j.value("n_target", 0LL);
    if (j.contains("vertex_count") &&
        j["vertex_count"].get<int>() != inst.vertex_count)
      throw std::invalid_argument("instance JSON: vertex_count inconsistent");
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace plyforge
