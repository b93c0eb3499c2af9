#pragma once
// Seeded generators and the built-in fixture graphs. All sampling runs on
// mt19937_64 with modulo draws so outputs are identical across platforms.

#include <cstdint>
#include <string>
#include <vector>

#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"

namespace ehig {

// fig1i, fig1ii, fig2, fig4-k13
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

struct IntervalSample {
  IntervalHypergraph model;
  Graph graph;  // intersection graph of the model
};

IntervalSample random_interval_graph(int n, std::uint64_t seed);

// Fixed-length staircase: no nesting, claw-free intersection graph (asserted).
IntervalSample random_proper_interval_graph(int n, std::uint64_t seed);

Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// Grown by attaching each new vertex to a clique in the current graph.
Graph random_connected_chordal(int n, std::uint64_t seed);

IntervalHypergraph random_hypergraph(int max_points, int max_intervals, std::uint64_t seed);

}  // namespace ehig
