#include "ehig/recognize.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace ehig {

namespace {

struct Stab {
  std::vector<int> picks;    // chosen positions, ascending
  std::vector<int> forcing;  // per pick: the target whose clipped range forced it
};

// Optimal piercing of clipped ranges: sweep by right endpoint, pick the
// right endpoint of the first unpierced range. The forcing ranges are
// pairwise disjoint, one per pick.
Stab greedy_stab(const std::vector<std::pair<std::pair<int, int>, int>>& ranges) {
  auto sorted = ranges;  // ((left, right), vertex)
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<std::pair<int, int>, int>> by_right(sorted);
  std::stable_sort(by_right.begin(), by_right.end(),
                   [](const auto& a, const auto& b) { return a.first.second < b.first.second; });
  Stab out;
  int last = 0;
  for (const auto& [range, v] : by_right) {
    if (range.first <= last && last > 0) continue;  // already pierced
    out.picks.push_back(range.second);
    out.forcing.push_back(v);
    last = range.second;
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, int>> clipped(const CliquePath& cp,
                                                         const std::vector<int>& targets,
                                                         int from, int to) {
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (int v : targets) {
    int l = std::max(cp.ranges[v].first, from);
    int r = std::min(cp.ranges[v].second, to);
    if (l > r) throw std::logic_error("target range misses the clip window");
    out.push_back({{l, r}, v});
  }
  return out;
}

std::vector<int> closed_neighborhood(const CliquePath& cp, int v) {
  // neighbours share a clique with v, so their ranges meet v's range
  std::set<int> nb{v};
  for (int j = cp.ranges[v].first; j <= cp.ranges[v].second; ++j)
    for (int u : cp.cliques[j - 1]) nb.insert(u);
  return {nb.begin(), nb.end()};
}

}  // namespace

std::vector<int> neighborhood_clique_cover(const CliquePath& cp, int v) {
  auto picks = greedy_stab(clipped(cp, closed_neighborhood(cp, v),
                                   cp.ranges[v].first, cp.ranges[v].second))
                   .picks;
  if (picks.empty() || picks.back() != cp.ranges[v].second)
    throw std::logic_error("neighbourhood cover lost the end clique");
  return picks;
}

std::vector<int> range_clique_cover(const CliquePath& cp, int from, int to,
                                    const std::vector<int>& targets) {
  return greedy_stab(clipped(cp, targets, from, to)).picks;
}

namespace {

bool disjoint_cliques(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else return false;
  }
  return true;
}

// Vertex of clique `pos` with the largest range end, ties to the smallest
// label; vertex indices follow label order in graphs built here.
int longest_vertex(const CliquePath& cp, int pos, int min_end) {
  int best = -1;
  for (int v : cp.cliques[pos - 1]) {
    if (cp.ranges[v].second <= min_end) continue;
    if (best < 0 || cp.ranges[v].second > cp.ranges[best].second ||
        (cp.ranges[v].second == cp.ranges[best].second && v < best))
      best = v;
  }
  return best;
}

int predecessor(const std::vector<int>& cover, int pos) {
  int prev = 0;
  for (int c : cover) {
    if (c >= pos) break;
    prev = c;
  }
  return prev;
}

std::vector<int> window_targets(const CliquePath& cp, int from, int to) {
  std::set<int> t;
  for (int j = from; j <= to; ++j)
    for (int v : cp.cliques[j - 1]) t.insert(v);
  return {t.begin(), t.end()};
}

}  // namespace

BackbonePath construct_backbone(const CliquePath& cp) {
  BackbonePath b;
  const int t = cp.length();
  if (t == 0) return b;
  std::set<int> cc;
  int seg = 0;

  auto push_fresh = [&](int pos) {
    int v = longest_vertex(cp, pos, -1);
    for (int c : neighborhood_clique_cover(cp, v)) cc.insert(c);
    b.vertices.push_back(v);
    b.end_clique.push_back(cp.ranges[v].second);
    b.cover.assign(cc.begin(), cc.end());
    b.prev_cover_clique.push_back(predecessor(b.cover, cp.ranges[v].second));
    b.segment.push_back(seg);
  };

  push_fresh(1);
  for (;;) {
    int rcur = b.end_clique.back();
    if (rcur == t) break;
    if (disjoint_cliques(cp.cliques[rcur - 1], cp.cliques[rcur])) {
      ++seg;  // next clique starts a new component
      push_fresh(rcur + 1);
      continue;
    }
    // Longest strict candidate outside the previous cover element; when all
    // of them end at rcur the walk would stall, so fall back to the longest
    // vertex of the whole clique, which reaches past rcur here.
    int prev = b.prev_cover_clique.back();
    int next = -1;
    for (int v : cp.cliques[rcur - 1]) {
      if (prev > 0 &&
          std::binary_search(cp.cliques[prev - 1].begin(), cp.cliques[prev - 1].end(), v))
        continue;
      if (cp.ranges[v].second <= rcur) continue;
      if (next < 0 || cp.ranges[v].second > cp.ranges[next].second ||
          (cp.ranges[v].second == cp.ranges[next].second && v < next))
        next = v;
    }
    if (next < 0) next = longest_vertex(cp, rcur, rcur);
    if (next < 0) throw std::logic_error("backbone cannot progress past an inner clique");
    int rnext = cp.ranges[next].second;
    for (int c : range_clique_cover(cp, rcur + 1, rnext, window_targets(cp, rcur + 1, rnext)))
      cc.insert(c);
    b.vertices.push_back(next);
    b.end_clique.push_back(rnext);
    b.cover.assign(cc.begin(), cc.end());
    b.prev_cover_clique.push_back(predecessor(b.cover, rnext));
    b.segment.push_back(seg);
  }
  return b;
}

CoverProfile cover_size_profile(const BackbonePath& b, const CliquePath& cp) {
  CoverProfile p;
  for (int v : b.vertices)
    p.sizes.push_back(static_cast<int>(neighborhood_clique_cover(cp, v).size()));
  for (size_t i = 0; i < p.sizes.size(); ++i) {
    if (p.sizes[i] >= 4) p.has_four = true;
    if (p.sizes[i] == 3) ++p.threes;
    if (i + 1 < p.sizes.size() && b.segment[i] == b.segment[i + 1] && p.sizes[i] == 3 &&
        p.sizes[i + 1] == 3)
      p.adjacent_threes = true;
  }
  return p;
}

PartitionCoverResult build_partition_cover(const BackbonePath& b, const CliquePath& cp) {
  PartitionCoverResult res;
  const int a = static_cast<int>(b.cover.size());
  std::vector<std::vector<int>> K;
  for (int pos : b.cover) K.push_back(cp.cliques[pos - 1]);
  auto clique_at = [&](int j) {  // 1-based, empty outside
    return (j >= 1 && j <= a) ? K[j - 1] : std::vector<int>{};
  };
  auto minus = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  };

  int star = -1;  // first walk vertex with a 3-clique neighbourhood cover
  for (size_t i = 0; i < b.vertices.size() && star < 0; ++i)
    if (neighborhood_clique_cover(cp, b.vertices[i]).size() == 3) star = b.vertices[i];
  int l = a + 1;
  if (star >= 0) {
    std::vector<int> in;
    for (int j = 1; j <= a; ++j)
      if (std::binary_search(K[j - 1].begin(), K[j - 1].end(), star)) in.push_back(j);
    if (in.size() != 3 || in[1] != in[0] + 1 || in[2] != in[0] + 2) {
      res.diagnostic =
          "the cover-3 vertex does not lie in exactly three consecutive cover cliques";
      return res;
    }
    l = in[0];
  }

  std::vector<std::vector<int>> blocks;
  for (int j = 1; j <= a; ++j) {
    if (j < l || j >= l + 3) {
      blocks.push_back(minus(clique_at(j), clique_at(j + 1)));
    } else if (j == l) {
      blocks.push_back(minus(clique_at(j), clique_at(j + 1)));
    } else if (j == l + 1) {
      auto rest = minus(clique_at(j), clique_at(j - 1));
      blocks.push_back(minus(rest, clique_at(j + 1)));
    } else {  // j == l + 2
      blocks.push_back(minus(clique_at(j), blocks.back()));
    }
  }

  int order = 0;
  for (const auto& q : cp.cliques)
    for (int v : q) order = std::max(order, v + 1);
  std::vector<int> owner(order, -1);
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) {
      res.diagnostic = "block " + std::to_string(i + 1) + " is empty";
      return res;
    }
    for (int v : blocks[i]) {
      if (owner[v] >= 0) {
        res.diagnostic = "blocks " + std::to_string(owner[v] + 1) + " and " +
                         std::to_string(i + 1) + " overlap";
        return res;
      }
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < order; ++v)
    if (owner[v] < 0) {
      res.diagnostic = "vertex index " + std::to_string(v) + " is uncovered";
      return res;
    }
  res.blocks = std::move(blocks);
  return res;
}

std::optional<HittingSet> extract_hitting_points(const StretchedModel& m,
                                                 const std::vector<std::vector<int>>& blocks,
                                                 std::string* failed_block) {
  const auto& iv = m.hypergraph.intervals;
  HittingSet points;
  for (const auto& block : blocks) {
    std::set<size_t> want(block.begin(), block.end());
    int found = 0;
    for (int p = 1; p <= m.hypergraph.point_count && !found; ++p) {
      std::set<size_t> at;
      for (size_t i = 0; i < iv.size(); ++i)
        if (iv[i].left <= p && p <= iv[i].right) at.insert(i);
      if (at == want) found = p;
    }
    if (!found) {
      if (failed_block) {
        std::string s;
        for (size_t i : block) s += (s.empty() ? "" : " ") + iv[i].id;
        *failed_block = s;
      }
      return std::nullopt;
    }
    points.push_back(found);
  }
  std::sort(points.begin(), points.end());
  return points;
}

bool triple_intersection_check(const BackbonePath& b, const CliquePath& cp) {
  for (size_t i = 0; i + 2 < b.cover.size(); ++i) {
    const auto& x = cp.cliques[b.cover[i] - 1];
    const auto& y = cp.cliques[b.cover[i + 1] - 1];
    const auto& z = cp.cliques[b.cover[i + 2] - 1];
    std::vector<int> xy, xyz;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(xy));
    std::set_intersection(xy.begin(), xy.end(), z.begin(), z.end(), std::back_inserter(xyz));
    if (xyz.size() > 1) return false;
  }
  return true;
}

bool verify_forbidden_witness(const Graph& g, const ForbiddenWitness& w) {
  if (w.path.empty()) return false;
  std::set<int> seen;
  for (int v : w.path) {
    if (v < 0 || v >= g.order() || !seen.insert(v).second) return false;
  }
  for (size_t i = 0; i < w.path.size(); ++i)
    for (size_t j = i + 1; j < w.path.size(); ++j) {
      bool consecutive = j == i + 1;
      if (g.adjacent(w.path[i], w.path[j]) != consecutive) return false;
    }
  if (w.independents.size() < w.path.size() + 3) return false;
  for (int u : w.independents) {
    if (u < 0 || u >= g.order() || !seen.insert(u).second) return false;
    bool attached = false;
    for (int v : w.path)
      if (g.adjacent(u, v)) attached = true;
    if (!attached) return false;
  }
  for (size_t i = 0; i < w.independents.size(); ++i)
    for (size_t j = i + 1; j < w.independents.size(); ++j)
      if (g.adjacent(w.independents[i], w.independents[j])) return false;
  return true;
}

namespace {

// Largest independent set inside the open neighbourhood of a path: ranges of
// nonadjacent interval vertices are disjoint, so the disjoint-range greedy
// is exact.
std::vector<int> neighborhood_mis(const Graph& g, const CliquePath& cp,
                                  const std::vector<int>& path) {
  std::vector<char> on_path(g.order(), 0);
  for (int v : path) on_path[v] = 1;
  std::vector<int> nb;
  for (int u = 0; u < g.order(); ++u) {
    if (on_path[u]) continue;
    for (int v : path)
      if (g.adjacent(u, v)) {
        nb.push_back(u);
        break;
      }
  }
  std::sort(nb.begin(), nb.end(), [&](int x, int y) {
    if (cp.ranges[x].second != cp.ranges[y].second)
      return cp.ranges[x].second < cp.ranges[y].second;
    return x < y;
  });
  std::vector<int> mis;
  int last = 0;
  for (int u : nb)
    if (cp.ranges[u].first > last || mis.empty()) {
      mis.push_back(u);
      last = cp.ranges[u].second;
    }
  return mis;
}

std::optional<ForbiddenWitness> witness_from_path(const Graph& g, const CliquePath& cp,
                                                  const std::vector<int>& path) {
  ForbiddenWitness w;
  w.path = path;
  w.independents = neighborhood_mis(g, cp, path);
  if (w.independents.size() < path.size() + 3) return std::nullopt;
  if (!verify_forbidden_witness(g, w)) return std::nullopt;
  return w;
}

bool paths_rec(const Graph& g, const CliquePath& cp, size_t size, std::vector<int>& path,
               std::optional<ForbiddenWitness>& hit) {
  if (path.size() == size) {
    if (path.size() >= 2 && path.front() > path.back()) return false;  // reversal dup
    hit = witness_from_path(g, cp, path);
    return hit.has_value();
  }
  int back = path.back();
  for (int u : g.adj[back]) {
    bool induced = true;
    for (size_t i = 0; i + 1 < path.size() && induced; ++i)
      if (u == path[i] || g.adjacent(u, path[i])) induced = false;
    if (!induced) continue;
    path.push_back(u);
    if (paths_rec(g, cp, size, path, hit)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ForbiddenWitness> extract_forbidden_witness(const Graph& g, const CliquePath& cp,
                                                          const BackbonePath& b, int path_cap) {
  auto profile = cover_size_profile(b, cp);
  for (size_t i = 0; i < b.vertices.size(); ++i)
    if (profile.sizes[i] >= 4)
      if (auto w = witness_from_path(g, cp, {b.vertices[i]})) return w;
  for (size_t i = 0; i < b.vertices.size(); ++i) {
    if (profile.sizes[i] != 3) continue;
    for (size_t j = i + 1; j < b.vertices.size() && b.segment[j] == b.segment[i]; ++j) {
      if (profile.sizes[j] != 3) continue;
      std::vector<int> sub(b.vertices.begin() + i, b.vertices.begin() + j + 1);
      if (auto w = witness_from_path(g, cp, sub)) return w;
      break;  // only the nearest following 3 within the segment
    }
  }
  for (size_t size = 1; size <= static_cast<size_t>(path_cap); ++size) {
    for (int s = 0; s < g.order(); ++s) {
      std::vector<int> path{s};
      std::optional<ForbiddenWitness> hit;
      if (paths_rec(g, cp, size, path, hit)) return hit;
    }
  }
  return std::nullopt;
}

RecognitionCertificate recognize(const Graph& g, bool skip_twin_reduction, int witness_path_cap) {
  RecognitionCertificate cert;
  auto first = interval_clique_path(g);
  if (!first.path) {
    cert.verdict = Verdict::invalid_input;
    if (first.reason == IntervalReason::not_chordal) {
      cert.error = "not an interval graph: chordless cycle found";
      for (int v : first.hole) cert.hole.push_back(g.labels[v]);
    } else {
      cert.error = "not an interval graph: maximal cliques admit no consecutive arrangement";
    }
    return cert;
  }
  CliquePath cp;
  if (skip_twin_reduction) {
    cert.reduced = g;
    cp = *first.path;
  } else {
    auto tr = reduce_twins(g);
    cert.merged = std::move(tr.merged);
    cert.reduced = std::move(tr.graph);
    if (cert.merged.empty()) {
      cp = *first.path;
    } else {
      auto again = interval_clique_path(cert.reduced);
      if (!again.path) throw std::logic_error("twin reduction broke the clique path");
      cp = *again.path;
    }
  }
  cert.clique_path = cp;
  try {
    cert.model = build_canonical(cert.reduced, cp);
  } catch (const std::invalid_argument& e) {
    cert.verdict = Verdict::invalid_input;
    cert.error = e.what();
    return cert;
  }
  if (!verify_canonical(cert.reduced, *cert.model))
    throw std::logic_error("canonical model failed verification");
  auto mem = min_membership_hitting(cert.model->hypergraph);
  cert.membership = mem.max_hits;
  if (mem.max_hits <= 1) {
    cert.verdict = Verdict::ehig;
    cert.hitting = mem.points;
    if (!cert.reduced.labels.empty() &&
        !exact_hit_check(cert.model->hypergraph, cert.hitting).exact)
      throw std::logic_error("exact hitting certificate failed verification");
    const auto& iv = cert.model->hypergraph.intervals;
    std::vector<int> hits(iv.size(), 0);
    for (int p : cert.hitting) {
      std::vector<std::string> block;
      for (size_t i = 0; i < iv.size(); ++i)
        if (iv[i].left <= p && p <= iv[i].right) {
          block.push_back(iv[i].id);
          ++hits[i];
        }
      std::sort(block.begin(), block.end());
      for (size_t x = 0; x < block.size(); ++x)
        for (size_t y = x + 1; y < block.size(); ++y)
          if (!cert.reduced.adjacent(cert.reduced.index_of(block[x]),
                                     cert.reduced.index_of(block[y])))
            throw std::logic_error("hitting block is not a clique");
      if (!block.empty()) cert.partition.push_back(std::move(block));
    }
    for (int h : hits)
      if (h != 1) throw std::logic_error("hitting blocks do not partition the vertices");
  } else {
    cert.verdict = Verdict::not_ehig;
    auto backbone = construct_backbone(cp);
    cert.witness = extract_forbidden_witness(cert.reduced, cp, backbone, witness_path_cap);
  }
  return cert;
}

}  // namespace ehig
