#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ehig/canonical.hpp"
#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"
#include "ehig/models.hpp"
#include "ehig/recognize.hpp"

namespace py = pybind11;

namespace {

ehig::Graph make_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::vector<std::string>& vertices) {
  return ehig::build_graph(edges, vertices);
}

ehig::IntervalHypergraph make_hypergraph(const std::vector<std::pair<int, int>>& ranges,
                                         int point_count) {
  ehig::IntervalHypergraph h;
  for (auto [l, r] : ranges) {
    h.intervals.push_back({"i" + std::to_string(h.intervals.size()), l, r});
    h.point_count = std::max(h.point_count, r);
  }
  h.point_count = std::max(h.point_count, point_count);
  ehig::require_valid(h);
  return h;
}

py::dict model_dict(const ehig::StretchedModel& m) {
  py::dict d;
  py::list iv;
  for (const auto& i : m.hypergraph.intervals)
    iv.append(py::make_tuple(i.id, i.left, i.right));
  d["intervals"] = iv;
  d["points"] = m.hypergraph.point_count;
  py::list zeros;
  for (const auto& g : m.gadgets) zeros.append(g.zero);
  d["zeros"] = zeros;
  d["separators"] = m.separators;
  return d;
}

py::dict recognize_py(const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::vector<std::string>& vertices) {
  auto cert = ehig::recognize(make_graph(edges, vertices));
  py::dict d;
  switch (cert.verdict) {
    case ehig::Verdict::ehig: d["verdict"] = "ehig"; break;
    case ehig::Verdict::not_ehig: d["verdict"] = "not-ehig"; break;
    default: d["verdict"] = "invalid";
  }
  if (cert.verdict == ehig::Verdict::invalid_input) {
    d["error"] = cert.error;
    if (!cert.hole.empty()) d["hole"] = cert.hole;
    return d;
  }
  d["merged"] = cert.merged;
  d["membership"] = cert.membership;
  d["model"] = model_dict(*cert.model);
  if (cert.verdict == ehig::Verdict::ehig) {
    d["hitting"] = cert.hitting;
    d["partition"] = cert.partition;
  } else if (cert.witness) {
    py::list path, indep;
    for (int v : cert.witness->path) path.append(cert.reduced.labels[v]);
    for (int v : cert.witness->independents) indep.append(cert.reduced.labels[v]);
    d["witness_path"] = path;
    d["witness_independent"] = indep;
  }
  return d;
}

py::object exactly_hittable_py(const std::vector<std::pair<int, int>>& ranges, int point_count) {
  auto hit = ehig::exactly_hittable(make_hypergraph(ranges, point_count));
  if (!hit) return py::none();
  return py::cast(*hit);
}

py::tuple min_membership_py(const std::vector<std::pair<int, int>>& ranges, int point_count) {
  auto r = ehig::min_membership_hitting(make_hypergraph(ranges, point_count));
  return py::make_tuple(r.max_hits, r.points);
}

py::dict canonical_py(const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::vector<std::string>& vertices) {
  auto cert = ehig::recognize(make_graph(edges, vertices));
  if (cert.verdict == ehig::Verdict::invalid_input)
    throw std::invalid_argument(cert.error);
  py::dict d = model_dict(*cert.model);
  d["merged"] = cert.merged;
  return d;
}

py::dict harary_py(const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::vector<std::string>& vertices) {
  auto m = ehig::harary_model(make_graph(edges, vertices));
  py::dict d;
  d["universe"] = m.universe;
  py::dict sets;
  for (const auto& [id, elems] : m.sets) sets[py::cast(id)] = elems;
  d["sets"] = sets;
  d["hitting"] = m.hitting;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ehig, m) {
  m.doc() = "exactly hittable interval graph toolkit";
  m.def("recognize", &recognize_py, py::arg("edges"),
        py::arg("vertices") = std::vector<std::string>{},
        "Decide whether the graph is an exactly hittable interval graph; "
        "returns the verdict with its certificate.");
  m.def("exactly_hittable", &exactly_hittable_py, py::arg("intervals"),
        py::arg("point_count") = 0,
        "Exact hitting set of an interval system as 1-based (l, r) pairs, or None.");
  m.def("min_membership", &min_membership_py, py::arg("intervals"),
        py::arg("point_count") = 0,
        "Minimum achievable maximum hits per interval, with an optimal point set.");
  m.def("canonical_model", &canonical_py, py::arg("edges"),
        py::arg("vertices") = std::vector<std::string>{},
        "Canonical stretched interval model of an interval graph.");
  m.def("harary_model", &harary_py, py::arg("edges"),
        py::arg("vertices") = std::vector<std::string>{},
        "Vertex-plus-incident-edges set system with its exact hitting set.");
}
