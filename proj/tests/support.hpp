#pragma once
// Test-side oracles, deliberately independent of the library's algorithms:
// subset-scan minimax hitting, interval recognition through vertex orders,
// and isomorphism-distinct graph enumeration by canonical adjacency masks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"

namespace support {

// Smallest achievable maximum hit count over all hitting sets.
inline int brute_minimax(const ehig::IntervalHypergraph& h) {
  if (h.intervals.empty()) return 0;
  if (h.point_count > 20) throw std::invalid_argument("too many points for a subset scan");
  std::vector<std::uint32_t> member(h.intervals.size(), 0);
  for (size_t i = 0; i < h.intervals.size(); ++i)
    for (int p = h.intervals[i].left; p <= h.intervals[i].right; ++p)
      member[i] |= 1u << (p - 1);
  int best = static_cast<int>(h.intervals.size()) + 1;
  for (std::uint32_t s = 1; s < (1u << h.point_count); ++s) {
    int worst = 0;
    for (std::uint32_t m : member) {
      int hits = __builtin_popcount(s & m);
      if (hits == 0) { worst = -1; break; }
      worst = std::max(worst, hits);
    }
    if (worst > 0) best = std::min(best, worst);
  }
  if (best > static_cast<int>(h.intervals.size()))
    throw std::logic_error("no hitting set found, which is impossible");
  return best;
}

// Interval model obtained from a vertex order where any edge jumping over a
// vertex implies the shorter edge; every intersection graph of intervals has
// one (sort by left endpoint) and any graph with one is such an intersection
// graph. The search tries orders depth first. The returned model is checked
// against g before it escapes.
inline bool order_extends(const ehig::Graph& g, const std::vector<int>& prefix, int v) {
  for (size_t a = 0; a < prefix.size(); ++a)
    if (g.adjacent(prefix[a], v))
      for (size_t b = a + 1; b < prefix.size(); ++b)
        if (!g.adjacent(prefix[a], prefix[b])) return false;
  return true;
}

inline bool order_search(const ehig::Graph& g, std::vector<int>& prefix, std::vector<bool>& used) {
  if (static_cast<int>(prefix.size()) == g.order()) return true;
  for (int v = 0; v < g.order(); ++v) {
    if (used[v] || !order_extends(g, prefix, v)) continue;
    used[v] = true;
    prefix.push_back(v);
    if (order_search(g, prefix, used)) return true;
    prefix.pop_back();
    used[v] = false;
  }
  return false;
}

inline std::optional<ehig::IntervalHypergraph> order_model(const ehig::Graph& g) {
  const int n = g.order();
  std::vector<int> order;
  std::vector<bool> used(n, false);
  if (!order_search(g, order, used)) return std::nullopt;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
  ehig::IntervalHypergraph h;
  h.point_count = n;
  for (int v = 0; v < n; ++v) {
    int right = pos[v];
    for (int w : g.adj[v]) right = std::max(right, pos[w]);
    h.intervals.push_back({g.labels[v], pos[v], right});
  }
  std::sort(h.intervals.begin(), h.intervals.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      const auto &iv = h.intervals[v], &iw = h.intervals[w];
      bool meets = std::max(iv.left, iw.left) <= std::min(iv.right, iw.right);
      int gv = g.index_of(iv.id), gw = g.index_of(iw.id);
      if (meets != g.adjacent(gv, gw))
        throw std::logic_error("order model disagrees with its graph");
    }
  return h;
}

// Adjacency masks over edge slots (i, j), i < j, slot j*(j-1)/2 + i.
inline int edge_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline ehig::Graph mask_graph(int n, std::uint32_t mask) {
  std::vector<std::string> vertices;
  for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> edge_slot(i, j) & 1u) edges.push_back({vertices[i], vertices[j]});
  return ehig::build_graph(edges, vertices);
}

inline std::uint32_t canonical_mask(int n, std::uint32_t mask,
                                    const std::vector<std::vector<int>>& slot_maps) {
  std::uint32_t best = ~0u;
  for (const auto& map : slot_maps) {
    std::uint32_t out = 0;
    for (std::uint32_t rest = mask; rest;) {
      int slot = __builtin_ctz(rest);
      rest &= rest - 1;
      out |= 1u << map[slot];
    }
    best = std::min(best, out);
  }
  return best;
}

// One representative per isomorphism class, grown a vertex at a time.
inline std::vector<std::uint32_t> graphs_upto_iso(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports 1 to 7 vertices");
  std::vector<std::uint32_t> level{0};  // the one-vertex graph
  for (int k = 2; k <= n; ++k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> slot_maps;
    do {
      std::vector<int> map(k * (k - 1) / 2);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < j; ++i) map[edge_slot(i, j)] = edge_slot(perm[i], perm[j]);
      slot_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> next;
    for (std::uint32_t parent : level)
      for (std::uint32_t nbr = 0; nbr < (1u << (k - 1)); ++nbr) {
        std::uint32_t child = parent;
        for (int i = 0; i < k - 1; ++i)
          if (nbr >> i & 1u) child |= 1u << edge_slot(i, k - 1);
        std::uint32_t canon = canonical_mask(k, child, slot_maps);
        if (seen.insert(canon).second) next.push_back(canon);
      }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

inline bool chordless_cycle(const ehig::Graph& g, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  std::vector<int> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

inline std::vector<int> hole_indices(const ehig::Graph& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(g.index_of(l));
  return out;
}

}  // namespace support
