#include "ehig/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ehig {

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it != labels.end() && *it == label) return static_cast<int>(it - labels.begin());
  // labels are sorted in graphs built here, but accept arbitrary order too
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                  const std::vector<std::string>& vertices) {
  std::set<std::string> names(vertices.begin(), vertices.end());
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self loop at " + a);
    if (a.empty() || b.empty()) throw std::invalid_argument("empty vertex label");
    names.insert(a);
    names.insert(b);
  }
  for (const auto& v : vertices)
    if (v.empty()) throw std::invalid_argument("empty vertex label");
  Graph g;
  g.labels.assign(names.begin(), names.end());
  g.adj.resize(g.labels.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    int u = g.index_of(a), v = g.index_of(b);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    ++g.edge_count;
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  std::vector<int> pos(g.order(), -1);
  Graph h;
  for (int v : k) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex index out of range");
    pos[v] = static_cast<int>(h.labels.size());
    h.labels.push_back(g.labels[v]);
  }
  h.adj.resize(h.labels.size());
  for (int v : k) {
    for (int w : g.adj[v]) {
      if (pos[w] < 0 || w < v) continue;
      h.adj[pos[v]].push_back(pos[w]);
      h.adj[pos[w]].push_back(pos[v]);
      ++h.edge_count;
    }
  }
  for (auto& a : h.adj) std::sort(a.begin(), a.end());
  return h;
}

namespace {

// Breadth-first path between two vertices avoiding a forbidden set; empty
// when no such path exists.
std::vector<int> bfs_path(const Graph& g, int from, int to, const std::vector<bool>& forbidden) {
  std::vector<int> prev(g.order(), -2);
  std::deque<int> q;
  prev[from] = -1;
  q.push_back(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == to) break;
    for (int w : g.adj[v]) {
      if (forbidden[w] || prev[w] != -2) continue;
      prev[w] = v;
      q.push_back(w);
    }
  }
  if (prev[to] == -2) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Chordless cycle through v and its nonadjacent neighbours u, w: a shortest
// u-w path outside N[v] has no chords, and v sees only its endpoints.
std::vector<int> hole_through(const Graph& g, int v, int u, int w) {
  std::vector<bool> forbidden(g.order(), false);
  forbidden[v] = true;
  for (int x : g.adj[v]) forbidden[x] = true;
  forbidden[u] = forbidden[w] = false;
  auto path = bfs_path(g, u, w, forbidden);
  if (path.empty()) return {};
  std::vector<int> hole{v};
  hole.insert(hole.end(), path.begin(), path.end());
  return hole;
}

std::vector<int> find_hole(const Graph& g, int v0, int u0, int w0) {
  if (v0 >= 0) {
    auto h = hole_through(g, v0, u0, w0);
    if (!h.empty()) return h;
  }
  for (int v = 0; v < g.order(); ++v) {
    const auto& nb = g.adj[v];
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        auto h = hole_through(g, v, nb[i], nb[j]);
        if (!h.empty()) return h;
      }
    }
  }
  return {};
}

}  // namespace

ChordalResult maximal_cliques_chordal(const Graph& g) {
  const int n = g.order();
  ChordalResult res;
  // Maximum cardinality search; reverse pick order is the elimination
  // candidate, and it succeeds exactly when the graph is chordal.
  std::vector<int> weight(n, 0), picked(n, 0), pick_order;
  pick_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!picked[v] && (best < 0 || weight[v] > weight[best])) best = v;
    picked[best] = 1;
    pick_order.push_back(best);
    for (int w : g.adj[best])
      if (!picked[w]) ++weight[w];
  }
  std::vector<int> order(pick_order.rbegin(), pick_order.rend());
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::vector<int>> later(n);  // RN(v): neighbours after v in order
  for (int v = 0; v < n; ++v) {
    for (int w : g.adj[v])
      if (rank[w] > rank[v]) later[v].push_back(w);
    std::sort(later[v].begin(), later[v].end(),
              [&](int a, int b) { return rank[a] < rank[b]; });
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (later[v].empty()) continue;
    int u = later[v][0];
    for (size_t j = 1; j < later[v].size(); ++j) {
      int w = later[v][j];
      if (!g.adjacent(u, w)) {
        res.hole = find_hole(g, v, u, w);
        if (res.hole.empty()) throw std::logic_error("chordality refutation lost its hole");
        return res;
      }
    }
  }

  // Chordal: candidates {v} + RN(v) cover all maximal cliques; drop the
  // properly contained ones.
  std::vector<std::vector<int>> cand;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> c = later[v];
    c.push_back(v);
    std::sort(c.begin(), c.end());
    cand.push_back(std::move(c));
  }
  for (size_t i = 0; i < cand.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cand.size() && maximal; ++j) {
      if (i == j || cand[j].size() <= cand[i].size()) continue;
      if (std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(), cand[i].end()))
        maximal = false;
    }
    if (maximal) res.cliques.push_back(cand[i]);
  }
  auto label_seq = [&](const std::vector<int>& c) {
    std::vector<std::string> s;
    for (int v : c) s.push_back(g.labels[v]);
    return s;
  };
  std::sort(res.cliques.begin(), res.cliques.end(),
            [&](const auto& a, const auto& b) { return label_seq(a) < label_seq(b); });
  res.order = std::move(order);
  return res;
}

namespace {

// Backtracking consecutive arrangement of one component's cliques. Vertex
// states: untouched, open (seen, may continue), closed (seen and left).
// A clique may not revive a closed vertex, and closing a vertex with
// unplaced cliques left is a dead end, so invalid prefixes die immediately.
bool arrange_rec(const std::vector<std::vector<int>>& cliques,
                 const std::vector<std::vector<int>>& cliques_of,
                 std::vector<int>& remaining, std::vector<int>& state,
                 std::vector<char>& used, std::vector<int>& out) {
  const int m = static_cast<int>(cliques.size());
  if (static_cast<int>(out.size()) == m) return true;
  for (int c = 0; c < m; ++c) {
    if (used[c]) continue;
    bool ok = true;
    for (int v : cliques[c])
      if (state[v] == 2) { ok = false; break; }
    if (!ok) continue;
    std::vector<int> closed_now, opened_now;
    for (int v : cliques[c]) {
      if (state[v] == 0) {
        state[v] = 1;
        opened_now.push_back(v);
      }
      --remaining[v];
    }
    for (size_t i = 0; i < cliques_of.size() && ok; ++i) {
      // close open vertices missing from c; they must be finished
      if (state[i] != 1) continue;
      bool inside = std::binary_search(cliques[c].begin(), cliques[c].end(), static_cast<int>(i));
      if (!inside) {
        state[i] = 2;
        closed_now.push_back(static_cast<int>(i));
        if (remaining[i] > 0) ok = false;
      }
    }
    if (ok) {
      used[c] = 1;
      out.push_back(c);
      if (arrange_rec(cliques, cliques_of, remaining, state, used, out)) return true;
      out.pop_back();
      used[c] = 0;
    }
    for (int v : closed_now) state[v] = 1;
    for (int v : cliques[c]) ++remaining[v];
    for (int v : opened_now) state[v] = 0;
  }
  return false;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::deque<int> q{s};
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      members.push_back(v);
      for (int w : g.adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          q.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

CliquePathResult interval_clique_path(const Graph& g) {
  CliquePathResult res;
  auto ch = maximal_cliques_chordal(g);
  if (!ch.order) {
    res.reason = IntervalReason::not_chordal;
    res.hole = ch.hole;
    return res;
  }
  const int n = g.order();
  std::vector<int> vertex_comp(n, -1);
  auto comps = components(g);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) vertex_comp[v] = static_cast<int>(c);

  // Components are arranged independently and concatenated in order of
  // their smallest vertex label; labels are sorted, so index order works.
  std::vector<std::vector<std::vector<int>>> per_comp(comps.size());
  for (auto& q : ch.cliques) per_comp[vertex_comp[q[0]]].push_back(q);

  CliquePath path;
  for (auto& local : per_comp) {
    auto label_seq = [&](const std::vector<int>& c) {
      std::vector<std::string> s;
      for (int v : c) s.push_back(g.labels[v]);
      return s;
    };
    std::sort(local.begin(), local.end(),
              [&](const auto& a, const auto& b) { return label_seq(a) < label_seq(b); });
    std::vector<int> remaining(n, 0), state(n, 0), out;
    std::vector<std::vector<int>> cliques_of(n);
    for (size_t c = 0; c < local.size(); ++c)
      for (int v : local[c]) {
        ++remaining[v];
        cliques_of[v].push_back(static_cast<int>(c));
      }
    std::vector<char> used(local.size(), 0);
    if (!arrange_rec(local, cliques_of, remaining, state, used, out)) {
      res.reason = IntervalReason::not_consecutive;
      return res;
    }
    std::vector<std::vector<std::string>> fwd, rev;
    for (int c : out) fwd.push_back(label_seq(local[c]));
    rev.assign(fwd.rbegin(), fwd.rend());
    if (rev < fwd) std::reverse(out.begin(), out.end());
    for (int c : out) path.cliques.push_back(local[c]);
  }
  path.ranges.assign(n, {0, 0});
  for (int j = 0; j < path.length(); ++j)
    for (int v : path.cliques[j]) {
      if (path.ranges[v].first == 0) path.ranges[v].first = j + 1;
      path.ranges[v].second = j + 1;
    }
  res.path = std::move(path);
  return res;
}

IntervalHypergraph vertex_ranges(const Graph& g, const CliquePath& cp) {
  IntervalHypergraph h;
  h.point_count = cp.length();
  for (int v = 0; v < g.order(); ++v)
    h.intervals.push_back({g.labels[v], cp.ranges[v].first, cp.ranges[v].second});
  return h;
}

TwinReduction reduce_twins(const Graph& g) {
  TwinReduction out;
  out.graph = g;
  for (;;) {
    const Graph& cur = out.graph;
    // Closed twins share a maximal clique set, hence a clique range.
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < cur.order(); ++v) {
      std::vector<int> key = cur.adj[v];
      key.push_back(v);
      std::sort(key.begin(), key.end());
      classes[key].push_back(v);
    }
    std::vector<int> keep;
    std::map<std::string, std::string> merged_now;
    for (auto& [key, members] : classes) {
      int rep = members[0];
      for (int v : members)
        if (cur.labels[v] < cur.labels[rep]) rep = v;
      keep.push_back(rep);
      for (int v : members)
        if (v != rep) merged_now[cur.labels[v]] = cur.labels[rep];
    }
    if (merged_now.empty()) break;
    for (auto& [from, to] : out.merged) {
      auto it = merged_now.find(to);
      if (it != merged_now.end()) to = it->second;
    }
    for (auto& [from, to] : merged_now) out.merged[from] = to;
    std::sort(keep.begin(), keep.end());
    out.graph = induced_subgraph(cur, keep);
  }
  return out;
}

std::optional<Claw> find_claw(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const auto& nb = g.adj[c];
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (size_t k = j + 1; k < nb.size(); ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          return Claw{c, {nb[i], nb[j], nb[k]}};
        }
      }
  }
  return std::nullopt;
}

ProperIntervalResult is_proper_interval(const Graph& g) {
  ProperIntervalResult res;
  res.claw = find_claw(g);
  auto cp = interval_clique_path(g);
  if (!cp.path) {
    res.reason = cp.reason;
    res.hole = cp.hole;
    return res;
  }
  res.proper = !res.claw.has_value();
  return res;
}

namespace detail {

Graph graph_from_intersections(const std::vector<std::string>& ids,
                               const std::vector<std::vector<bool>>& meets) {
  const int n = static_cast<int>(ids.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  for (int i = 1; i < n; ++i)
    if (ids[perm[i]] == ids[perm[i - 1]])
      throw std::invalid_argument("duplicate set id " + ids[perm[i]]);
  std::vector<int> where(n);
  for (int i = 0; i < n; ++i) where[perm[i]] = i;
  Graph g;
  for (int i = 0; i < n; ++i) g.labels.push_back(ids[perm[i]]);
  g.adj.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (meets[a][b]) {
        g.adj[where[a]].push_back(where[b]);
        g.adj[where[b]].push_back(where[a]);
        ++g.edge_count;
      }
  for (auto& v : g.adj) std::sort(v.begin(), v.end());
  return g;
}

}  // namespace detail

namespace {

bool iso_rec(const Graph& a, const Graph& b, const std::vector<int>& order, size_t at,
             std::vector<int>& map, std::vector<char>& used) {
  if (at == order.size()) return true;
  int v = order[at];
  for (int w = 0; w < b.order(); ++w) {
    if (used[w] || a.adj[v].size() != b.adj[w].size()) continue;
    bool ok = true;
    for (size_t i = 0; i < at && ok; ++i) {
      int p = order[i];
      if (a.adjacent(v, p) != b.adjacent(w, map[p])) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (iso_rec(a, b, order, at + 1, map, used)) return true;
    used[w] = 0;
    map[v] = -1;
  }
  return false;
}

}  // namespace

bool graph_isomorphic_small(const Graph& a, const Graph& b,
                            const std::optional<std::map<std::string, std::string>>& hint) {
  if (a.order() != b.order() || a.edge_count != b.edge_count) return false;
  if (hint) {
    if (static_cast<int>(hint->size()) != a.order()) return false;
    std::vector<int> map(a.order(), -1);
    std::vector<char> used(b.order(), 0);
    for (const auto& [from, to] : *hint) {
      int u = a.index_of(from), v = b.index_of(to);
      if (u < 0 || v < 0 || used[v]) return false;
      map[u] = v;
      used[v] = 1;
    }
    for (int u = 0; u < a.order(); ++u)
      for (int v = u + 1; v < a.order(); ++v)
        if (a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
    return true;
  }
  if (a.order() > 12) throw std::invalid_argument("isomorphism search guarded to 12 vertices");
  std::vector<size_t> da, db;
  for (const auto& x : a.adj) da.push_back(x.size());
  for (const auto& x : b.adj) db.push_back(x.size());
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> order(a.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (a.adj[x].size() != a.adj[y].size()) return a.adj[x].size() > a.adj[y].size();
    return x < y;
  });
  std::vector<int> map(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  return iso_rec(a, b, order, 0, map, used);
}

std::vector<std::string> validate_clique_path(const Graph& g, const CliquePath& cp) {
  std::vector<std::string> out;
  const int n = g.order();
  const int t = cp.length();
  if (static_cast<int>(cp.ranges.size()) != n) {
    out.push_back("range list size differs from vertex count");
    return out;
  }
  std::set<std::vector<int>> distinct;
  for (int j = 0; j < t; ++j) {
    const auto& q = cp.cliques[j];
    std::string tag = "clique " + std::to_string(j + 1);
    if (q.empty()) out.push_back(tag + " is empty");
    if (!std::is_sorted(q.begin(), q.end()) ||
        std::adjacent_find(q.begin(), q.end()) != q.end())
      out.push_back(tag + " is not sorted and distinct");
    for (int v : q)
      if (v < 0 || v >= n) out.push_back(tag + " has an out-of-range vertex");
    if (!distinct.insert(q).second) out.push_back(tag + " repeats an earlier clique");
    for (size_t x = 0; x < q.size(); ++x)
      for (size_t y = x + 1; y < q.size(); ++y)
        if (!g.adjacent(q[x], q[y]))
          out.push_back(tag + " is not a clique: " + g.labels[q[x]] + " " + g.labels[q[y]]);
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(q.begin(), q.end(), v)) continue;
      bool all = !q.empty();
      for (int u : q)
        if (!g.adjacent(u, v)) { all = false; break; }
      if (all) out.push_back(tag + " is not maximal: add " + g.labels[v]);
    }
  }
  if (!out.empty()) return out;
  for (int v = 0; v < n; ++v) {
    auto [l, r] = cp.ranges[v];
    if (l < 1 || r > t || l > r) {
      out.push_back("vertex " + g.labels[v] + " has a bad range");
      continue;
    }
    for (int j = 0; j < t; ++j) {
      bool inside = std::binary_search(cp.cliques[j].begin(), cp.cliques[j].end(), v);
      bool covered = l <= j + 1 && j + 1 <= r;
      if (inside != covered) {
        out.push_back("vertex " + g.labels[v] + " breaks consecutiveness at position " +
                      std::to_string(j + 1));
        break;
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      bool shared = false;
      for (int j = 0; j < t && !shared; ++j)
        shared = std::binary_search(cp.cliques[j].begin(), cp.cliques[j].end(), u) &&
                 std::binary_search(cp.cliques[j].begin(), cp.cliques[j].end(), v);
      if (!shared)
        out.push_back("edge " + g.labels[u] + " " + g.labels[v] + " lies in no clique");
    }
  return out;
}

}  // namespace ehig
