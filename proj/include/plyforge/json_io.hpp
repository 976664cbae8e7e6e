#ifndef PLYFORGE_JSON_IO_HPP
#define PLYFORGE_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "plyforge/geometry.hpp"
#include "plyforge/lowerbound.hpp"
#include "plyforge/tree.hpp"

namespace plyforge {

// Tree JSON: {"root": id, "nodes": [{"id": int, "children": [int,...]}]}
std::string tree_to_json(const RootedTree& tree);
RootedTree tree_from_json(const std::string& text);

// Drawing JSON: {"alpha": float, "vertices": [{"id","x","y"}],
//                "edges": [[int,int],...]}
std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

// Heavy path decomposition JSON (paths, anchors, heights, total_height).
std::string decomposition_to_json(const HeavyPathDecomposition& hpd);

// Lower-bound instance JSON: parameters, edges, and the 2-tree construction
// order.
std::string instance_to_json(const LowerBoundInstance& inst);
LowerBoundInstance instance_from_json(const std::string& text);

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace plyforge

#endif
