#pragma once
// Simple undirected graphs with string labels; chordality by maximum
// cardinality search, interval recognition via consecutive clique
// arrangements, twin reduction, and small induced-structure searches.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehig/hypergraph.hpp"

namespace ehig {

struct Graph {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj;  // sorted neighbour lists
  int edge_count = 0;

  int order() const { return static_cast<int>(labels.size()); }
  bool adjacent(int u, int v) const;
  int index_of(const std::string& label) const;  // -1 when absent
};

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& vertices = {});

// Induced subgraph on the given vertex indices (sorted, labels preserved).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Maximal cliques arranged on a line; ranges are 1-based clique indices.
struct CliquePath {
  std::vector<std::vector<int>> cliques;    // each sorted by vertex index
  std::vector<std::pair<int, int>> ranges;  // per vertex: [l, r]

  int length() const { return static_cast<int>(cliques.size()); }
};

enum class IntervalReason { ok, not_chordal, not_consecutive };

struct CliquePathResult {
  std::optional<CliquePath> path;
  IntervalReason reason = IntervalReason::ok;
  std::vector<int> hole;  // chordless cycle of length >= 4 when not_chordal
};

struct ChordalResult {
  std::optional<std::vector<int>> order;    // perfect elimination order
  std::vector<std::vector<int>> cliques;    // maximal cliques when chordal
  std::vector<int> hole;                    // refutation cycle otherwise
};

ChordalResult maximal_cliques_chordal(const Graph& g);

CliquePathResult interval_clique_path(const Graph& g);

// Per-vertex clique ranges as an interval hypergraph over 1..t.
IntervalHypergraph vertex_ranges(const Graph& g, const CliquePath& cp);

struct TwinReduction {
  Graph graph;
  std::map<std::string, std::string> merged;  // deleted label -> kept label
};

// Collapses vertices with identical clique ranges until none remain.
TwinReduction reduce_twins(const Graph& g);

struct Claw {
  int center = -1;
  std::array<int, 3> leaves{};
};

std::optional<Claw> find_claw(const Graph& g);

struct ProperIntervalResult {
  bool proper = false;
  std::optional<Claw> claw;
  IntervalReason reason = IntervalReason::ok;
  std::vector<int> hole;
};

ProperIntervalResult is_proper_interval(const Graph& g);

namespace detail {
Graph graph_from_intersections(const std::vector<std::string>& ids,
                               const std::vector<std::vector<bool>>& meets);
}

// Intersection graph of labelled sets; vertices keep the set ids.
template <typename Element>
Graph intersection_graph(const std::vector<std::pair<std::string, std::vector<Element>>>& sets) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::vector<Element>> sorted(n);
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = sets[i].first;
    sorted[i] = sets[i].second;
    std::sort(sorted[i].begin(), sorted[i].end());
  }
  std::vector<std::vector<bool>> meets(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      size_t a = 0, b = 0;
      bool hit = false;
      while (a < sorted[i].size() && b < sorted[j].size()) {
        if (sorted[i][a] < sorted[j][b]) ++a;
        else if (sorted[j][b] < sorted[i][a]) ++b;
        else { hit = true; break; }
      }
      meets[i][j] = meets[j][i] = hit;
    }
  }
  return detail::graph_from_intersections(ids, meets);
}

// Exact isomorphism test; without a hint the search is guarded to 12 vertices.
bool graph_isomorphic_small(
    const Graph& a, const Graph& b,
    const std::optional<std::map<std::string, std::string>>& hint = std::nullopt);

// Empty when cp satisfies every clique-path invariant against g.
std::vector<std::string> validate_clique_path(const Graph& g, const CliquePath& cp);

}  // namespace ehig
