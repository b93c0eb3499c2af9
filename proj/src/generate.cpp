#include "ehig/generate.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ehig {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

std::string pad_label(const char* prefix, int i, int n) {
  int width = 1;
  for (int x = n; x >= 10; x /= 10) ++width;
  std::ostringstream out;
  out << prefix;
  for (int x = i, d = 1; d < width; d *= 10)
    if (x < d * 10) out << '0';
  out << i;
  return out.str();
}

Graph interval_intersections(const IntervalHypergraph& h) {
  Edges edges;
  std::vector<std::string> ids;
  for (const auto& iv : h.intervals) ids.push_back(iv.id);
  for (size_t a = 0; a < h.intervals.size(); ++a)
    for (size_t b = a + 1; b < h.intervals.size(); ++b) {
      const auto& x = h.intervals[a];
      const auto& y = h.intervals[b];
      if (std::max(x.left, y.left) <= std::min(x.right, y.right))
        edges.push_back({x.id, y.id});
    }
  return build_graph(edges, ids);
}

}  // namespace

Graph fixture(const std::string& name) {
  if (name == "fig1i")
    return build_graph({{"u", "w1"}, {"u", "w2"}, {"u", "w3"}, {"u", "w4"}});
  if (name == "fig1ii")
    return build_graph({{"c", "a"},
                        {"d", "a"},
                        {"u", "a"},
                        {"u", "b"},
                        {"a", "b"},
                        {"e", "b"},
                        {"f", "b"}});
  if (name == "fig2")
    return build_graph({{"a", "d"},
                        {"a", "u"},
                        {"d", "u"},
                        {"b", "d"},
                        {"b", "u"},
                        {"b", "e"},
                        {"u", "e"},
                        {"c", "e"},
                        {"c", "u"}});
  if (name == "fig4-k13") return build_graph({{"u", "w1"}, {"u", "w2"}, {"u", "w3"}});
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"fig1i", "fig1ii", "fig2", "fig4-k13"}; }

IntervalSample random_interval_graph(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::mt19937_64 rng(seed);
  IntervalSample s;
  s.model.point_count = 2 * n;
  for (int i = 1; i <= n; ++i) {
    int a = 1 + static_cast<int>(rng() % (2 * n));
    int b = 1 + static_cast<int>(rng() % (2 * n));
    s.model.intervals.push_back({pad_label("v", i, n), std::min(a, b), std::max(a, b)});
  }
  s.graph = interval_intersections(s.model);
  return s;
}

IntervalSample random_proper_interval_graph(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::mt19937_64 rng(seed);
  IntervalSample s;
  s.model.point_count = 3 * n;
  for (int i = 1; i <= n; ++i) {
    int l = 1 + static_cast<int>(rng() % (2 * n));
    s.model.intervals.push_back({pad_label("v", i, n), l, l + n});
  }
  s.graph = interval_intersections(s.model);
  if (!is_proper(s.model)) throw std::logic_error("staircase sample is not proper");
  if (find_claw(s.graph)) throw std::logic_error("proper staircase produced a claw");
  return s;
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  Edges edges;
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(pad_label("v", i, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<double>(rng() % 1000000) / 1000000.0 < edge_prob)
        edges.push_back({vertices[i], vertices[j]});
  return build_graph(edges, vertices);
}

Graph random_connected_chordal(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::mt19937_64 rng(seed);
  // Each new vertex is attached to a subset of a known clique, so it is
  // simplicial at insertion time and the graph stays chordal and connected.
  std::vector<std::vector<int>> cliques{{0}};
  Edges edges;
  std::vector<std::string> vertices{pad_label("v", 1, n)};
  for (int i = 1; i < n; ++i) {
    vertices.push_back(pad_label("v", i + 1, n));
    auto base = cliques[rng() % cliques.size()];
    for (size_t k = base.size(); k > 1; --k)
      std::swap(base[k - 1], base[rng() % k]);
    base.resize(1 + rng() % base.size());
    for (int u : base) edges.push_back({vertices[u], vertices[i]});
    base.push_back(i);
    cliques.push_back(std::move(base));
  }
  return build_graph(edges, vertices);
}

IntervalHypergraph random_hypergraph(int max_points, int max_intervals, std::uint64_t seed) {
  if (max_points < 1 || max_intervals < 1)
    throw std::invalid_argument("bounds must be at least 1");
  std::mt19937_64 rng(seed);
  IntervalHypergraph h;
  h.point_count = 1 + static_cast<int>(rng() % max_points);
  int m = 1 + static_cast<int>(rng() % max_intervals);
  for (int i = 1; i <= m; ++i) {
    int a = 1 + static_cast<int>(rng() % h.point_count);
    int b = 1 + static_cast<int>(rng() % h.point_count);
    h.intervals.push_back({pad_label("e", i, m), std::min(a, b), std::max(a, b)});
  }
  return h;
}

}  // namespace ehig
