#pragma once
// Exactly-hittable recognition: neighbourhood clique covers, the backbone
// walk with its accumulated cover, the partition-cover study construction,
// forbidden-structure witnesses, and the end-to-end recognizer. The verdict
// always comes from the hypergraph solve on the canonical model; the
// partition construction is validated separately and never decides.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ehig/canonical.hpp"
#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"

namespace ehig {

// Minimum set of clique indices stabbing every range of N[v], clipped to
// v's own range; the last chosen index is always r(v).
std::vector<int> neighborhood_clique_cover(const CliquePath& cp, int v);

// Minimum clique indices within [from, to] stabbing every target's clipped range.
std::vector<int> range_clique_cover(const CliquePath& cp, int from, int to,
                                    const std::vector<int>& targets);

struct BackbonePath {
  std::vector<int> vertices;           // walk order
  std::vector<int> end_clique;         // per step: clique where v_i ends
  std::vector<int> prev_cover_clique;  // per step: cover element before end_clique, 0 if none
  std::vector<int> segment;            // per step: component segment id
  std::vector<int> cover;              // accumulated clique cover, ascending
};

// Walk from the longest vertex of Q_1 to the last clique, accumulating a
// clique cover of everything passed. Each next vertex comes from the clique
// where the current one ends, preferring vertices outside the previous
// cover element; when none of those extends the walk, any extending vertex
// of that clique is taken instead so the walk always reaches Q_t.
BackbonePath construct_backbone(const CliquePath& cp);

struct CoverProfile {
  std::vector<int> sizes;  // per walk vertex: |neighborhood_clique_cover|
  bool has_four = false;   // any size >= 4
  int threes = 0;
  bool adjacent_threes = false;
};

CoverProfile cover_size_profile(const BackbonePath& b, const CliquePath& cp);

struct PartitionCoverResult {
  std::optional<std::vector<std::vector<int>>> blocks;  // vertex indices
  std::string diagnostic;
};

// Three-case block construction over the accumulated cover; validated
// (pairwise disjoint, union = V, every block a clique) before returning.
PartitionCoverResult build_partition_cover(const BackbonePath& b, const CliquePath& cp);

// One model point per block whose containing-interval set is exactly the
// block; absent with the offending block when some block has no such point.
std::optional<HittingSet> extract_hitting_points(const StretchedModel& m,
                                                 const std::vector<std::vector<int>>& blocks,
                                                 std::string* failed_block = nullptr);

// Every three consecutive accumulated-cover cliques share at most one vertex.
bool triple_intersection_check(const BackbonePath& b, const CliquePath& cp);

struct ForbiddenWitness {
  std::vector<int> path;          // induced path
  std::vector<int> independents;  // independent set inside N(path), size >= |path| + 3
};

bool verify_forbidden_witness(const Graph& g, const ForbiddenWitness& w);

// Constructive extraction from the cover profile first (single vertex with
// cover >= 4, else a segment between two cover-3 vertices), falling back to
// a bounded exhaustive induced-path search. Returned witnesses are verified.
std::optional<ForbiddenWitness> extract_forbidden_witness(const Graph& g, const CliquePath& cp,
                                                          const BackbonePath& b, int path_cap = 6);

enum class Verdict { ehig, not_ehig, invalid_input };

struct RecognitionCertificate {
  Verdict verdict = Verdict::invalid_input;
  std::string error;         // invalid_input reason
  std::vector<std::string> hole;  // chordless-cycle refutation labels, when present

  std::map<std::string, std::string> merged;  // twin reduction map
  Graph reduced;                              // graph the model was built from
  std::optional<CliquePath> clique_path;
  std::optional<StretchedModel> model;
  int membership = 0;  // min membership value on the model

  HittingSet hitting;                               // ehig
  std::vector<std::vector<std::string>> partition;  // per hitting point

  std::optional<ForbiddenWitness> witness;  // not_ehig; indices into reduced
};

RecognitionCertificate recognize(const Graph& g, bool skip_twin_reduction = false,
                                 int witness_path_cap = 6);

}  // namespace ehig
