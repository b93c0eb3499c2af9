#pragma once
// Canonical stretched interval model of an interval graph: one gadget per
// clique of the clique path, a zero point per gadget, single separator
// points between gadgets, all left endpoints distinct, all right endpoints
// distinct.

#include <string>
#include <utility>
#include <vector>

#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"

namespace ehig {

struct Gadget {
  int first = 0;  // span of points occupied by the gadget
  int last = 0;
  int zero = 0;
};

struct StretchedModel {
  IntervalHypergraph hypergraph;  // one interval per vertex, id = vertex label
  std::vector<std::pair<std::string, std::string>> vertex_map;  // vertex -> interval id
  std::vector<Gadget> gadgets;    // in clique-path order
  std::vector<int> separators;
};

// Requires pairwise distinct ranges (run reduce_twins first).
StretchedModel build_canonical(const Graph& g, const CliquePath& cp);

std::vector<std::string> stretched_model_violations(const Graph& g, const StretchedModel& m);

// True iff all structural invariants hold and the intersection graph of the
// model equals g under vertex_map.
bool verify_canonical(const Graph& g, const StretchedModel& m);

}  // namespace ehig
