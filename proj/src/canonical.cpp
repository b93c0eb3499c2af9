#include "ehig/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ehig {

StretchedModel build_canonical(const Graph& g, const CliquePath& cp) {
  const int n = g.order();
  const int t = cp.length();
  {
    std::set<std::pair<int, int>> distinct;
    for (auto& r : cp.ranges)
      if (!distinct.insert(r).second)
        throw std::invalid_argument("twin ranges present: reduce twins first");
  }
  std::vector<std::vector<int>> starts(t), ends(t);
  for (int v = 0; v < n; ++v) {
    starts[cp.ranges[v].first - 1].push_back(v);
    ends[cp.ranges[v].second - 1].push_back(v);
  }
  // Starts of a gadget are laid out right to left in descending order of
  // their range ends, so the longest reach sits on the zero point; ends are
  // laid out left to right in ascending order of their range starts. Ranges
  // are pairwise distinct, so both orders are strict; the label tie-break
  // never fires but keeps the layout a total order.
  for (int i = 0; i < t; ++i) {
    std::sort(starts[i].begin(), starts[i].end(), [&](int a, int b) {
      if (cp.ranges[a].second != cp.ranges[b].second)
        return cp.ranges[a].second > cp.ranges[b].second;
      return g.labels[a] > g.labels[b];
    });
    std::sort(ends[i].begin(), ends[i].end(), [&](int a, int b) {
      if (cp.ranges[a].first != cp.ranges[b].first)
        return cp.ranges[a].first < cp.ranges[b].first;
      return g.labels[a] > g.labels[b];
    });
  }
  StretchedModel m;
  std::vector<int> left(n, 0), right(n, 0);
  int next = 1;
  for (int i = 0; i < t; ++i) {
    const int s = static_cast<int>(starts[i].size());
    const int e = static_cast<int>(ends[i].size());
    Gadget d;
    d.first = next;
    d.last = next + s + e - 2;
    d.zero = next + s - 1;
    for (int k = 0; k < s; ++k) left[starts[i][k]] = d.zero - k;
    for (int k = 0; k < e; ++k) right[ends[i][k]] = d.zero + k;
    m.gadgets.push_back(d);
    next = d.last + 2;
    if (i + 1 < t) m.separators.push_back(d.last + 1);
  }
  m.hypergraph.point_count = t == 0 ? 0 : next - 2;
  for (int v = 0; v < n; ++v) {
    m.hypergraph.intervals.push_back({g.labels[v], left[v], right[v]});
    m.vertex_map.push_back({g.labels[v], g.labels[v]});
  }
  require_valid(m.hypergraph);
  return m;
}

std::vector<std::string> stretched_model_violations(const Graph& g, const StretchedModel& m) {
  std::vector<std::string> out;
  for (const auto& v : validate(m.hypergraph))
    out.push_back("hypergraph: " + v.message +
                  (v.interval_id.empty() ? "" : " (" + v.interval_id + ")"));
  const int t = static_cast<int>(m.gadgets.size());
  int expect = 1;
  for (int i = 0; i < t; ++i) {
    const auto& d = m.gadgets[i];
    if (d.first != expect)
      out.push_back("gadget " + std::to_string(i + 1) + " does not start at point " +
                    std::to_string(expect));
    if (!(d.first <= d.zero && d.zero <= d.last))
      out.push_back("gadget " + std::to_string(i + 1) + " zero point outside its span");
    expect = d.last + 2;
  }
  if (t > 0 && m.gadgets.back().last != m.hypergraph.point_count)
    out.push_back("gadgets do not end at the last point");
  if (static_cast<int>(m.separators.size()) != std::max(0, t - 1))
    out.push_back("separator count is not one less than the gadget count");
  for (size_t i = 0; i + 1 < m.gadgets.size(); ++i)
    if (i < m.separators.size() && m.separators[i] != m.gadgets[i].last + 1)
      out.push_back("separator " + std::to_string(i + 1) + " misplaced");

  if (m.vertex_map.size() != g.labels.size() ||
      m.hypergraph.intervals.size() != g.labels.size())
    out.push_back("model size differs from graph order");
  std::map<std::string, std::string> to_interval;
  std::set<std::string> used_ids;
  for (const auto& [v, id] : m.vertex_map) {
    if (g.index_of(v) < 0) out.push_back("mapped vertex " + v + " not in graph");
    if (!to_interval.emplace(v, id).second) out.push_back("vertex " + v + " mapped twice");
    if (!used_ids.insert(id).second) out.push_back("interval " + id + " used twice");
  }
  std::map<std::string, const Interval*> by_id;
  for (const auto& iv : m.hypergraph.intervals) by_id[iv.id] = &iv;
  for (const auto& [v, id] : to_interval)
    if (!by_id.count(id)) out.push_back("vertex " + v + " maps to a missing interval");
  if (!out.empty()) return out;

  auto gadget_at = [&](int p) {
    for (int i = 0; i < t; ++i)
      if (m.gadgets[i].first <= p && p <= m.gadgets[i].last) return i;
    return -1;
  };
  std::set<int> lefts, rights;
  for (const auto& iv : m.hypergraph.intervals) {
    if (!lefts.insert(iv.left).second)
      out.push_back("shared left endpoint at " + std::to_string(iv.left));
    if (!rights.insert(iv.right).second)
      out.push_back("shared right endpoint at " + std::to_string(iv.right));
    int gl = gadget_at(iv.left), gr = gadget_at(iv.right);
    if (gl < 0)
      out.push_back("interval " + iv.id + " starts on a separator");
    else if (iv.left > m.gadgets[gl].zero)
      out.push_back("interval " + iv.id + " starts right of its gadget zero point");
    if (gr < 0)
      out.push_back("interval " + iv.id + " ends on a separator");
    else if (iv.right < m.gadgets[gr].zero)
      out.push_back("interval " + iv.id + " ends left of its gadget zero point");
  }
  return out;
}

bool verify_canonical(const Graph& g, const StretchedModel& m) {
  if (!stretched_model_violations(g, m).empty()) return false;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  const auto& iv = m.hypergraph.intervals;
  for (const auto& i : iv) ids.push_back(i.id);
  for (size_t a = 0; a < iv.size(); ++a)
    for (size_t b = a + 1; b < iv.size(); ++b)
      if (std::max(iv[a].left, iv[b].left) <= std::min(iv[a].right, iv[b].right))
        edges.push_back({iv[a].id, iv[b].id});
  Graph inter = build_graph(edges, ids);
  std::map<std::string, std::string> hint(m.vertex_map.begin(), m.vertex_map.end());
  return graph_isomorphic_small(g, inter, hint);
}

}  // namespace ehig
