#include "ehig/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace ehig {

bool operator==(const Interval& a, const Interval& b) {
  return a.id == b.id && a.left == b.left && a.right == b.right;
}

std::vector<Violation> validate(const IntervalHypergraph& h) {
  std::vector<Violation> out;
  if (h.point_count < 0 || (h.point_count == 0 && !h.intervals.empty()))
    out.push_back({"", "point count must be at least 1 when intervals are present"});
  std::set<std::string> seen;
  for (const auto& iv : h.intervals) {
    if (iv.id.empty()) out.push_back({iv.id, "empty interval id"});
    if (!seen.insert(iv.id).second) out.push_back({iv.id, "duplicate interval id"});
    if (iv.left > iv.right) out.push_back({iv.id, "left endpoint exceeds right endpoint"});
    if (iv.left < 1 || iv.right > h.point_count)
      out.push_back({iv.id, "endpoint outside 1..point_count"});
  }
  return out;
}

void require_valid(const IntervalHypergraph& h) {
  auto v = validate(h);
  if (v.empty()) return;
  std::string msg = "invalid hypergraph:";
  for (const auto& b : v) {
    msg += " [" + (b.interval_id.empty() ? std::string("-") : b.interval_id) + "] " + b.message + ";";
  }
  throw std::invalid_argument(msg);
}

HitCheck exact_hit_check(const IntervalHypergraph& h, const HittingSet& s) {
  require_valid(h);
  int prev = 0;
  for (int p : s) {
    if (p < 1 || p > h.point_count) throw std::invalid_argument("hitting point outside 1..point_count");
    if (p <= prev) throw std::invalid_argument("hitting set must be strictly increasing");
    prev = p;
  }
  HitCheck res;
  res.counts.resize(h.intervals.size(), 0);
  for (size_t i = 0; i < h.intervals.size(); ++i) {
    const auto& iv = h.intervals[i];
    for (int p : s)
      if (iv.left <= p && p <= iv.right) ++res.counts[i];
  }
  res.exact = std::all_of(res.counts.begin(), res.counts.end(), [](int c) { return c == 1; });
  return res;
}

namespace {

// Depth-first search over increasing point sequences in lexicographic
// order; a set already exact is reported before any extension of it.
bool ehs_search(const IntervalHypergraph& h, int from, std::vector<int>& counts,
                HittingSet& chosen) {
  bool all_one = true;
  int first_unhit_right = std::numeric_limits<int>::max();
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) {
      all_one = false;
      first_unhit_right = std::min(first_unhit_right, h.intervals[i].right);
    } else if (counts[i] != 1) {
      all_one = false;
    }
  }
  if (all_one) return true;
  // Any later point would strand the unhit interval ending first.
  int limit = std::min(first_unhit_right, h.point_count);
  for (int p = from; p <= limit; ++p) {
    bool doubles = false;
    for (size_t i = 0; i < counts.size() && !doubles; ++i) {
      const auto& iv = h.intervals[i];
      if (iv.left <= p && p <= iv.right && counts[i] == 1) doubles = true;
    }
    if (doubles) continue;
    for (size_t i = 0; i < counts.size(); ++i) {
      const auto& iv = h.intervals[i];
      if (iv.left <= p && p <= iv.right) ++counts[i];
    }
    chosen.push_back(p);
    if (ehs_search(h, p + 1, counts, chosen)) return true;
    chosen.pop_back();
    for (size_t i = 0; i < counts.size(); ++i) {
      const auto& iv = h.intervals[i];
      if (iv.left <= p && p <= iv.right) --counts[i];
    }
  }
  return false;
}

}  // namespace

std::optional<HittingSet> brute_force_ehs(const IntervalHypergraph& h, int point_guard) {
  require_valid(h);
  if (h.point_count > point_guard)
    throw std::invalid_argument("point count exceeds the exhaustive-search guard");
  if (h.intervals.empty()) return HittingSet{};
  std::vector<int> counts(h.intervals.size(), 0);
  HittingSet chosen;
  if (ehs_search(h, 1, counts, chosen)) return chosen;
  return std::nullopt;
}

namespace {

// Difference constraints on prefix sums y_0..y_n. Feasible for a given cap
// iff the constraint graph has no negative cycle; Bellman-Ford distances
// give an integral witness.
bool membership_feasible(const IntervalHypergraph& h, int cap, HittingSet* points) {
  const int n = h.point_count;
  struct Edge {
    int from, to, w;
  };
  std::vector<Edge> edges;
  edges.reserve(2 * n + 2 * h.intervals.size());
  for (int j = 1; j <= n; ++j) {
    edges.push_back({j - 1, j, 1});   // y_j - y_{j-1} <= 1
    edges.push_back({j, j - 1, 0});   // y_{j-1} - y_j <= 0
  }
  for (const auto& iv : h.intervals) {
    edges.push_back({iv.right, iv.left - 1, -1});  // at least one hit
    edges.push_back({iv.left - 1, iv.right, cap}); // at most cap hits
  }
  std::vector<long long> dist(n + 1, 0);  // every node reachable from y_0 via the chain
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      if (dist[e.from] + e.w < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.w;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == n) return false;  // still relaxing: negative cycle
  }
  if (points) {
    points->clear();
    for (int j = 1; j <= n; ++j)
      if (dist[j] - dist[j - 1] == 1) points->push_back(j);
  }
  return true;
}

}  // namespace

MembershipResult min_membership_hitting(const IntervalHypergraph& h) {
  require_valid(h);
  MembershipResult res;
  if (h.intervals.empty()) return res;  // vacuous
  int lo = 1, hi = static_cast<int>(h.intervals.size());
  if (!membership_feasible(h, hi, nullptr))
    throw std::logic_error("membership infeasible at the interval-count bound");
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (membership_feasible(h, mid, nullptr)) hi = mid;
    else lo = mid + 1;
  }
  membership_feasible(h, lo, &res.points);
  res.max_hits = lo;
  auto chk = exact_hit_check(h, res.points);
  int worst = 0;
  for (int c : chk.counts) {
    if (c < 1 || c > lo) throw std::logic_error("membership witness out of bounds");
    worst = std::max(worst, c);
  }
  if (worst != lo) throw std::logic_error("membership witness misses the minimax value");
  return res;
}

std::optional<HittingSet> exactly_hittable(const IntervalHypergraph& h) {
  auto r = min_membership_hitting(h);
  if (r.max_hits > 1) return std::nullopt;
  if (!h.intervals.empty() && !exact_hit_check(h, r.points).exact)
    throw std::logic_error("membership witness failed the exact-hit check");
  return r.points;
}

bool is_proper(const IntervalHypergraph& h) {
  require_valid(h);
  for (size_t i = 0; i < h.intervals.size(); ++i) {
    for (size_t j = 0; j < h.intervals.size(); ++j) {
      if (i == j) continue;
      const auto& a = h.intervals[i];
      const auto& b = h.intervals[j];
      // strict nesting of a inside b
      if (b.left <= a.left && a.right <= b.right && (b.left != a.left || a.right != b.right))
        return false;
    }
  }
  return true;
}

HittingSet proper_greedy_ehs(const IntervalHypergraph& h) {
  if (!is_proper(h)) throw std::invalid_argument("proper interval family required");
  // Identical intervals collapse to one representative; afterwards all left
  // endpoints are distinct and the left order equals the right order.
  std::set<std::pair<int, int>> distinct;
  for (const auto& iv : h.intervals) distinct.insert({iv.left, iv.right});
  HittingSet out;
  int last = 0;
  for (const auto& [l, r] : distinct) {
    if (l > last) {
      out.push_back(r);
      last = r;
    }
  }
  if (!h.intervals.empty()) {
    auto chk = exact_hit_check(h, out);
    if (!chk.exact) throw std::logic_error("greedy hit is not exact on a proper family");
  }
  return out;
}

}  // namespace ehig
