#include "ehig/models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ehig {

namespace {

std::string edge_label(const std::string& a, const std::string& b) {
  return a < b ? a + "~" + b : b + "~" + a;
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push_back(w);
      }
  }
  return count == g.order();
}

}  // namespace

SetSystemModel harary_model(const Graph& g) {
  SetSystemModel m;
  for (const auto& l : g.labels) m.universe.push_back(l);
  std::vector<std::string> edge_names;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.adj[u])
      if (u < v) edge_names.push_back(edge_label(g.labels[u], g.labels[v]));
  std::sort(edge_names.begin(), edge_names.end());
  for (const auto& e : edge_names) m.universe.push_back(e);
  for (int v = 0; v < g.order(); ++v) {
    std::vector<std::string> set{g.labels[v]};
    for (int u : g.adj[v]) set.push_back(edge_label(g.labels[v], g.labels[u]));
    std::sort(set.begin(), set.end());
    m.sets.push_back({g.labels[v], std::move(set)});
  }
  m.hitting = g.labels;

  // exactness: the only vertex element in E_v is v itself
  std::set<std::string> hit(m.hitting.begin(), m.hitting.end());
  for (const auto& [id, set] : m.sets) {
    int count = 0;
    for (const auto& e : set) count += hit.count(e);
    if (count != 1) throw std::logic_error("vertex set " + id + " is not hit exactly once");
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> sets(m.sets);
  Graph inter = intersection_graph(sets);
  std::map<std::string, std::string> identity;
  for (const auto& l : g.labels) identity[l] = l;
  if (!graph_isomorphic_small(g, inter, identity))
    throw std::logic_error("set system intersection graph differs from the input");
  return m;
}

std::optional<CliqueTree> clique_tree(const Graph& g) {
  if (!connected(g)) return std::nullopt;
  auto ch = maximal_cliques_chordal(g);
  if (!ch.order) return std::nullopt;
  CliqueTree t;
  t.cliques = ch.cliques;
  const int q = static_cast<int>(t.cliques.size());
  // maximum-weight spanning tree over shared-vertex counts
  struct Cand {
    int w, i, j;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      std::vector<int> common;
      std::set_intersection(t.cliques[i].begin(), t.cliques[i].end(), t.cliques[j].begin(),
                            t.cliques[j].end(), std::back_inserter(common));
      if (!common.empty()) cands.push_back({static_cast<int>(common.size()), i, j});
    }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<int> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : cands) {
    int a = find(c.i), b = find(c.j);
    if (a == b) continue;
    parent[a] = b;
    t.edges.push_back({c.i, c.j});
  }
  if (static_cast<int>(t.edges.size()) != std::max(0, q - 1))
    throw std::logic_error("clique intersections of a connected graph must span");

  // induced-subtree property: the cliques holding any vertex are connected
  std::vector<std::vector<int>> tadj(q);
  for (auto [i, j] : t.edges) {
    tadj[i].push_back(j);
    tadj[j].push_back(i);
  }
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> holds;
    for (int i = 0; i < q; ++i)
      if (std::binary_search(t.cliques[i].begin(), t.cliques[i].end(), v)) holds.push_back(i);
    if (holds.empty()) throw std::logic_error("vertex missing from every clique");
    std::set<int> in(holds.begin(), holds.end()), seen;
    std::deque<int> bfs{holds[0]};
    seen.insert(holds[0]);
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      for (int y : tadj[x])
        if (in.count(y) && !seen.count(y)) {
          seen.insert(y);
          bfs.push_back(y);
        }
    }
    if (seen.size() != in.size())
      throw std::logic_error("cliques of " + g.labels[v] + " do not induce a subtree");
  }
  return t;
}

SubtreeModel chordal_subtree_model(const Graph& g) {
  auto t = clique_tree(g);
  if (!t) {
    if (!connected(g))
      throw std::invalid_argument(
          "disconnected input: build a subtree model per component instead");
    throw std::invalid_argument("input graph is not chordal");
  }
  SubtreeModel m;
  m.tree = *t;
  const int q = static_cast<int>(m.tree.cliques.size());
  m.edges = m.tree.edges;
  for (int v = 0; v < g.order(); ++v) {
    int attach = -1;
    for (int i = 0; i < q && attach < 0; ++i)
      if (std::binary_search(m.tree.cliques[i].begin(), m.tree.cliques[i].end(), v)) attach = i;
    int leaf = q + v;
    m.leaf.push_back(leaf);
    m.edges.push_back({attach, leaf});
    std::vector<int> nodes;
    for (int i = 0; i < q; ++i)
      if (std::binary_search(m.tree.cliques[i].begin(), m.tree.cliques[i].end(), v))
        nodes.push_back(i);
    nodes.push_back(leaf);
    m.subtrees.push_back(std::move(nodes));
  }
  auto bad = subtree_model_violations(g, m);
  if (!bad.empty()) throw std::logic_error("subtree model violation: " + bad.front());
  return m;
}

std::vector<std::string> subtree_model_violations(const Graph& g, const SubtreeModel& m) {
  std::vector<std::string> out;
  const int q = static_cast<int>(m.tree.cliques.size());
  const int n = g.order();
  const int nodes = q + n;
  if (static_cast<int>(m.leaf.size()) != n || static_cast<int>(m.subtrees.size()) != n) {
    out.push_back("per-vertex data does not match the graph order");
    return out;
  }
  if (static_cast<int>(m.edges.size()) != std::max(0, nodes - 1))
    out.push_back("host edge count is not nodes minus one");
  std::vector<std::vector<int>> hadj(nodes);
  for (auto [i, j] : m.edges) {
    if (i < 0 || j < 0 || i >= nodes || j >= nodes || i == j) {
      out.push_back("host edge endpoint out of range");
      return out;
    }
    hadj[i].push_back(j);
    hadj[j].push_back(i);
  }
  if (nodes > 0) {
    std::vector<char> seen(nodes, 0);
    std::deque<int> bfs{0};
    seen[0] = 1;
    int count = 1;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      for (int y : hadj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          bfs.push_back(y);
        }
    }
    if (count != nodes) out.push_back("host tree is not connected");
  }
  if (!out.empty()) return out;

  for (int v = 0; v < n; ++v) {
    const auto& sub = m.subtrees[v];
    std::set<int> in(sub.begin(), sub.end());
    if (sub.empty() || in.size() != sub.size()) {
      out.push_back("subtree of " + g.labels[v] + " is empty or repeats nodes");
      continue;
    }
    if (!in.count(m.leaf[v])) out.push_back("subtree of " + g.labels[v] + " misses its leaf");
    std::set<int> seen{*in.begin()};
    std::deque<int> bfs{*in.begin()};
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      for (int y : hadj[x])
        if (in.count(y) && !seen.count(y)) {
          seen.insert(y);
          bfs.push_back(y);
        }
    }
    if (seen.size() != in.size())
      out.push_back("subtree of " + g.labels[v] + " is not connected in the host tree");
  }
  // leaves hit exactly once; intersections realize exactly the edges
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool holds = std::binary_search(m.subtrees[v].begin(), m.subtrees[v].end(), m.leaf[u]);
      if (holds) out.push_back("leaf of " + g.labels[u] + " lies in another subtree");
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> common;
      std::set_intersection(m.subtrees[u].begin(), m.subtrees[u].end(), m.subtrees[v].begin(),
                            m.subtrees[v].end(), std::back_inserter(common));
      if (common.empty() == g.adjacent(u, v))
        out.push_back("subtree intersection of " + g.labels[u] + " and " + g.labels[v] +
                      " contradicts the graph");
    }
  return out;
}

}  // namespace ehig
