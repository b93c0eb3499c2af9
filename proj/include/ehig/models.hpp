#pragma once
// Exactly hittable models for graphs beyond the interval case: the
// vertex-plus-incident-edges set system for arbitrary graphs, and the
// clique-tree subtree model with private leaves for connected chordal graphs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehig/graph.hpp"

namespace ehig {

struct SetSystemModel {
  std::vector<std::string> universe;
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;  // per vertex
  std::vector<std::string> hitting;
};

// Universe V + E, one set per vertex (itself plus incident edges); the
// vertex elements form an exact hitting set. Verified before return.
SetSystemModel harary_model(const Graph& g);

struct CliqueTree {
  std::vector<std::vector<int>> cliques;
  std::vector<std::pair<int, int>> edges;  // tree edges on clique indices
};

// Maximum-weight spanning tree of the clique intersection graph; absent
// unless g is connected and chordal. Induced-subtree property verified.
std::optional<CliqueTree> clique_tree(const Graph& g);

struct SubtreeModel {
  CliqueTree tree;                          // clique nodes 0..t-1
  std::vector<std::pair<int, int>> edges;   // host tree: tree.edges plus leaf edges
  std::vector<int> leaf;                    // per vertex: its private leaf node (t + i)
  std::vector<std::vector<int>> subtrees;   // per vertex: host tree nodes
};

// Clique tree plus one private leaf per vertex; the leaves form an exact
// hitting set of the subtree system. Verified before return.
SubtreeModel chordal_subtree_model(const Graph& g);

std::vector<std::string> subtree_model_violations(const Graph& g, const SubtreeModel& m);

}  // namespace ehig
