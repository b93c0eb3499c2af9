#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ehig/generate.hpp"
#include "ehig/graph.hpp"
#include "support.hpp"

using namespace ehig;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({"c" + std::to_string(i), "c" + std::to_string((i + 1) % n)});
  return build_graph(edges);
}

}  // namespace

TEST_CASE("construction dedupes edges and keeps isolated vertices") {
  auto g = build_graph({{"a", "b"}, {"b", "a"}, {"b", "c"}}, {"d"});
  CHECK(g.order() == 4);
  CHECK(g.edge_count == 2);
  CHECK(g.adjacent(g.index_of("a"), g.index_of("b")));
  CHECK(!g.adjacent(g.index_of("a"), g.index_of("c")));
  CHECK(g.index_of("d") >= 0);
  CHECK(g.index_of("zz") == -1);
  CHECK_THROWS_AS(build_graph({{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("chordality: cliques on chordal inputs, holes otherwise") {
  for (int n = 4; n <= 8; ++n) {
    auto res = maximal_cliques_chordal(cycle(n));
    CHECK(!res.order);
    CHECK(support::chordless_cycle(cycle(n), res.hole));
  }
  auto tri = maximal_cliques_chordal(cycle(3));
  REQUIRE(tri.order);
  REQUIRE(tri.cliques.size() == 1);
  CHECK(tri.cliques[0].size() == 3);

  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto g = random_connected_chordal(1 + seed % 9, seed);
    auto res = maximal_cliques_chordal(g);
    CAPTURE(seed);
    REQUIRE(res.order);
    std::set<std::vector<int>> seen;
    for (auto c : res.cliques) {
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) REQUIRE(g.adjacent(c[i], c[j]));
      // maximality: no vertex extends the clique
      for (int v = 0; v < g.order(); ++v) {
        if (std::find(c.begin(), c.end(), v) != c.end()) continue;
        bool all = true;
        for (int u : c) all = all && g.adjacent(u, v);
        REQUIRE(!all);
      }
      std::sort(c.begin(), c.end());
      CHECK(seen.insert(c).second);
    }
    CHECK(res.cliques.size() <= static_cast<size_t>(std::max(g.order(), 1)));
  }
}

TEST_CASE("interval recognition agrees with the vertex-order oracle up to six vertices") {
  std::vector<size_t> all_counts, interval_counts;
  for (int n = 1; n <= 6; ++n) {
    auto masks = support::graphs_upto_iso(n);
    all_counts.push_back(masks.size());
    size_t hits = 0;
    for (auto mask : masks) {
      auto g = support::mask_graph(n, mask);
      auto oracle = support::order_model(g);
      auto mine = interval_clique_path(g);
      CAPTURE(n);
      CAPTURE(mask);
      REQUIRE(oracle.has_value() == mine.path.has_value());
      if (mine.path) {
        ++hits;
        CHECK(validate_clique_path(g, *mine.path).empty());
      } else if (mine.reason == IntervalReason::not_chordal) {
        CHECK(support::chordless_cycle(g, mine.hole));
      }
    }
    interval_counts.push_back(hits);
  }
  CHECK(all_counts == std::vector<size_t>{1, 2, 4, 11, 34, 156});
  CHECK(interval_counts == std::vector<size_t>{1, 2, 4, 10, 27, 92});
}

TEST_CASE("asteroidal triple rejection is not mistaken for a hole") {
  // subdivided claw: chordal but not interval
  auto g = build_graph({{"u", "a1"}, {"a1", "a2"}, {"u", "b1"}, {"b1", "b2"},
                        {"u", "c1"}, {"c1", "c2"}});
  auto res = interval_clique_path(g);
  CHECK(!res.path);
  CHECK(res.reason == IntervalReason::not_consecutive);
}

TEST_CASE("vertex ranges form a valid hypergraph mirroring adjacency") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = random_interval_graph(1 + seed % 9, seed).graph;
    auto cp = interval_clique_path(g);
    REQUIRE(cp.path);
    auto h = vertex_ranges(g, *cp.path);
    CHECK(validate(h).empty());
    REQUIRE(h.intervals.size() == static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
      for (int w = v + 1; w < g.order(); ++w) {
        const auto& a = h.intervals[v];
        const auto& b = h.intervals[w];
        bool meet = std::max(a.left, b.left) <= std::min(a.right, b.right);
        CHECK(meet == g.adjacent(g.index_of(a.id), g.index_of(b.id)));
      }
  }
}

TEST_CASE("twin reduction collapses equal ranges and maps labels home") {
  auto k3 = build_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto tr = reduce_twins(k3);
  CHECK(tr.graph.order() == 1);
  CHECK(tr.merged.size() == 2);
  for (const auto& [gone, kept] : tr.merged) {
    CHECK(tr.graph.index_of(gone) == -1);
    CHECK(tr.graph.index_of(kept) >= 0);
  }

  auto fig2 = fixture("fig2");
  CHECK(reduce_twins(fig2).merged.empty());

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = random_interval_graph(1 + seed % 9, seed).graph;
    auto tr2 = reduce_twins(g);
    auto cp = interval_clique_path(tr2.graph);
    REQUIRE(cp.path);
    std::set<std::pair<int, int>> ranges(cp.path->ranges.begin(), cp.path->ranges.end());
    CHECK(ranges.size() == cp.path->ranges.size());
    CHECK(tr2.graph.order() + static_cast<int>(tr2.merged.size()) == g.order());
  }
}

TEST_CASE("claw finding") {
  auto k13 = fixture("fig4-k13");
  auto claw = find_claw(k13);
  REQUIRE(claw);
  CHECK(k13.labels[claw->center] == "u");
  for (int leaf : claw->leaves) {
    CHECK(k13.adjacent(claw->center, leaf));
    for (int other : claw->leaves)
      if (leaf != other) CHECK(!k13.adjacent(leaf, other));
  }
  CHECK(!find_claw(build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}})));
  CHECK(find_claw(fixture("fig1i")));
}

TEST_CASE("proper interval classification") {
  CHECK(is_proper_interval(build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}})).proper);
  auto claw = is_proper_interval(fixture("fig4-k13"));
  CHECK(!claw.proper);
  CHECK(claw.claw.has_value());
  auto hole = is_proper_interval(cycle(5));
  CHECK(!hole.proper);
  CHECK(hole.reason == IntervalReason::not_chordal);
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    CHECK(is_proper_interval(random_proper_interval_graph(1 + seed % 10, seed).graph).proper);
}

TEST_CASE("intersection graphs and isomorphism") {
  auto g = intersection_graph<int>({{"x", {1, 2}}, {"y", {2, 3}}, {"z", {4}}});
  CHECK(g.edge_count == 1);
  CHECK(g.adjacent(g.index_of("x"), g.index_of("y")));

  CHECK(graph_isomorphic_small(cycle(5), cycle(5)));
  CHECK(!graph_isomorphic_small(cycle(6), build_graph({{"a", "b"}, {"b", "c"}, {"a", "c"},
                                                       {"d", "e"}, {"e", "f"}, {"d", "f"}})));
  std::map<std::string, std::string> hint{{"c0", "c0"}, {"c1", "c1"}, {"c2", "c2"},
                                          {"c3", "c3"}, {"c4", "c4"}};
  CHECK(graph_isomorphic_small(cycle(5), cycle(5), hint));
  hint["c0"] = "c2";
  hint["c2"] = "c0";
  CHECK(!graph_isomorphic_small(cycle(5), cycle(5), hint));  // broken hint is rejected
}

TEST_CASE("induced subgraphs keep labels and edges") {
  auto g = fixture("fig2");
  std::vector<int> keep{g.index_of("b"), g.index_of("d"), g.index_of("u"), g.index_of("c")};
  auto sub = induced_subgraph(g, keep);
  CHECK(sub.order() == 4);
  CHECK(sub.adjacent(sub.index_of("b"), sub.index_of("d")));
  CHECK(sub.adjacent(sub.index_of("c"), sub.index_of("u")));
  CHECK(!sub.adjacent(sub.index_of("c"), sub.index_of("b")));
  CHECK(sub.edge_count == 4);  // bd, bu, du, cu
}

TEST_CASE("clique path validation rejects corrupted paths") {
  auto g = fixture("fig2");
  auto cp = *interval_clique_path(g).path;
  CHECK(validate_clique_path(g, cp).empty());
  auto swapped = cp;
  std::swap(swapped.cliques[1], swapped.cliques[2]);
  CHECK(!validate_clique_path(g, swapped).empty());
  auto clipped = cp;
  clipped.ranges[g.index_of("u")] = {1, 2};
  CHECK(!validate_clique_path(g, clipped).empty());
  auto missing = cp;
  missing.cliques.pop_back();
  CHECK(!validate_clique_path(g, missing).empty());
}
