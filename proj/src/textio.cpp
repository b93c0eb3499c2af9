#include "ehig/textio.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace ehig {

ParseError::ParseError(const std::string& what, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::vector<int> columns;  // 1-based start of each token
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line line{number, {}, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) {
        line.tokens.push_back(raw.substr(start, i - start));
        line.columns.push_back(static_cast<int>(start) + 1);
      }
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const Line& l, size_t idx, const std::string& what) {
  const std::string& s = l.tokens[idx];
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + " must be an integer, got '" + s + "'", l.number, l.columns[idx]);
  }
}

void need(const Line& l, size_t count, const std::string& what) {
  if (l.tokens.size() != count)
    throw ParseError(what, l.number, l.columns.empty() ? 1 : l.columns[0]);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("expected a 'graph <n> <m>' header", 1, 1);
  const Line& head = lines[0];
  if (head.tokens[0] != "graph")
    throw ParseError("expected 'graph', got '" + head.tokens[0] + "'", head.number,
                     head.columns[0]);
  need(head, 3, "header must be 'graph <n> <m>'");
  int n = parse_int(head, 1, "vertex count");
  int m = parse_int(head, 2, "edge count");
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "v") {
      need(l, 2, "vertex line must be 'v <label>'");
      vertices.push_back(l.tokens[1]);
    } else if (l.tokens[0] == "e") {
      need(l, 3, "edge line must be 'e <u> <v>'");
      if (l.tokens[1] == l.tokens[2])
        throw ParseError("self loop at '" + l.tokens[1] + "'", l.number, l.columns[1]);
      edges.push_back({l.tokens[1], l.tokens[2]});
    } else {
      throw ParseError("expected 'v' or 'e', got '" + l.tokens[0] + "'", l.number, l.columns[0]);
    }
  }
  Graph g = build_graph(edges, vertices);
  if (g.order() != n)
    throw ParseError("header declares " + std::to_string(n) + " vertices but " +
                         std::to_string(g.order()) + " are present",
                     head.number, head.columns[1]);
  if (g.edge_count != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(g.edge_count) + " distinct edges are present",
                     head.number, head.columns[2]);
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << " " << g.edge_count << "\n";
  for (const auto& l : g.labels) out << "v " << l << "\n";
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.adj[u])
      if (u < v) out << "e " << g.labels[u] << " " << g.labels[v] << "\n";
  return out.str();
}

IntervalHypergraph parse_hypergraph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("expected an 'ihg <n> <m>' header", 1, 1);
  const Line& head = lines[0];
  if (head.tokens[0] != "ihg")
    throw ParseError("expected 'ihg', got '" + head.tokens[0] + "'", head.number,
                     head.columns[0]);
  need(head, 3, "header must be 'ihg <n> <m>'");
  IntervalHypergraph h;
  h.point_count = parse_int(head, 1, "point count");
  int m = parse_int(head, 2, "interval count");
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "i")
      throw ParseError("expected 'i <id> <l> <r>', got '" + l.tokens[0] + "'", l.number,
                       l.columns[0]);
    need(l, 4, "interval line must be 'i <id> <l> <r>'");
    h.intervals.push_back(
        {l.tokens[1], parse_int(l, 2, "left endpoint"), parse_int(l, 3, "right endpoint")});
  }
  if (static_cast<int>(h.intervals.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " intervals but " +
                         std::to_string(h.intervals.size()) + " are present",
                     head.number, head.columns[2]);
  auto bad = validate(h);
  if (!bad.empty())
    throw ParseError(bad.front().message +
                         (bad.front().interval_id.empty() ? "" : " (" + bad.front().interval_id + ")"),
                     head.number, head.columns[0]);
  return h;
}

IntervalHypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string format_hypergraph(const IntervalHypergraph& h) {
  std::ostringstream out;
  out << "ihg " << h.point_count << " " << h.intervals.size() << "\n";
  for (const auto& iv : h.intervals)
    out << "i " << iv.id << " " << iv.left << " " << iv.right << "\n";
  return out.str();
}

std::string format_model(const StretchedModel& m) {
  std::ostringstream out;
  out << format_hypergraph(m.hypergraph);
  for (size_t i = 0; i < m.gadgets.size(); ++i)
    out << "# z " << i + 1 << " " << m.gadgets[i].zero << "\n";
  for (int s : m.separators) out << "# sep " << s << "\n";
  for (const auto& [v, id] : m.vertex_map) out << "# map " << v << " " << id << "\n";
  return out.str();
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

}  // namespace

std::string format_certificate(const RecognitionCertificate& cert) {
  std::ostringstream out;
  if (cert.verdict == Verdict::invalid_input) {
    out << "error " << cert.error << "\n";
    if (!cert.hole.empty()) out << "hole " << join(cert.hole) << "\n";
    return out.str();
  }
  out << "verdict " << (cert.verdict == Verdict::ehig ? "ehig" : "not-ehig") << "\n";
  for (const auto& [from, to] : cert.merged) out << "# merged " << from << " " << to << "\n";
  out << "# membership " << cert.membership << "\n";
  if (cert.model) out << "# model points " << cert.model->hypergraph.point_count << "\n";
  if (cert.verdict == Verdict::ehig) {
    for (size_t i = 0; i < cert.hitting.size(); ++i)
      out << "hit " << cert.hitting[i] << " : " << join(cert.partition[i]) << "\n";
  } else if (cert.witness) {
    std::vector<std::string> path, indep;
    for (int v : cert.witness->path) path.push_back(cert.reduced.labels[v]);
    for (int v : cert.witness->independents) indep.push_back(cert.reduced.labels[v]);
    out << "witness-path " << join(path) << "\n";
    out << "witness-indep " << join(indep) << "\n";
  } else {
    out << "# witness absent within the search caps\n";
  }
  return out.str();
}

std::string format_certificate_json(const RecognitionCertificate& cert) {
  nlohmann::json j;
  switch (cert.verdict) {
    case Verdict::ehig: j["verdict"] = "ehig"; break;
    case Verdict::not_ehig: j["verdict"] = "not-ehig"; break;
    case Verdict::invalid_input: j["verdict"] = "invalid-input"; break;
  }
  if (cert.verdict == Verdict::invalid_input) {
    j["error"] = cert.error;
    if (!cert.hole.empty()) j["hole"] = cert.hole;
    return j.dump(2) + "\n";
  }
  j["membership"] = cert.membership;
  j["merged"] = nlohmann::json::object();
  for (const auto& [from, to] : cert.merged) j["merged"][from] = to;
  j["hitting"] = cert.hitting;
  j["partition"] = cert.partition;
  j["witness_path"] = nlohmann::json::array();
  j["witness_independent"] = nlohmann::json::array();
  if (cert.witness) {
    for (int v : cert.witness->path) j["witness_path"].push_back(cert.reduced.labels[v]);
    for (int v : cert.witness->independents)
      j["witness_independent"].push_back(cert.reduced.labels[v]);
  }
  if (cert.model) {
    nlohmann::json model;
    model["points"] = cert.model->hypergraph.point_count;
    model["intervals"] = nlohmann::json::array();
    for (const auto& iv : cert.model->hypergraph.intervals)
      model["intervals"].push_back({{"id", iv.id}, {"left", iv.left}, {"right", iv.right}});
    model["zeros"] = nlohmann::json::array();
    for (const auto& d : cert.model->gadgets) model["zeros"].push_back(d.zero);
    model["separators"] = cert.model->separators;
    j["model"] = model;
  }
  return j.dump(2) + "\n";
}

std::string format_set_system(const SetSystemModel& m) {
  std::ostringstream out;
  for (const auto& [id, set] : m.sets) out << "set " << id << " : " << join(set) << "\n";
  out << "hitting : " << join(m.hitting) << "\n";
  return out.str();
}

std::string format_subtree_model(const Graph& g, const SubtreeModel& m) {
  std::ostringstream out;
  const int q = static_cast<int>(m.tree.cliques.size());
  for (int i = 0; i < q; ++i) {
    std::vector<std::string> members;
    for (int v : m.tree.cliques[i]) members.push_back(g.labels[v]);
    out << "node " << i << " # clique " << join(members) << "\n";
  }
  for (int v = 0; v < g.order(); ++v)
    out << "node " << m.leaf[v] << " # leaf " << g.labels[v] << "\n";
  for (auto [i, j] : m.edges) out << "edge " << i << " " << j << "\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "set " << g.labels[v] << " :";
    for (int node : m.subtrees[v]) out << " " << node;
    out << "\n";
  }
  out << "hitting :";
  for (int leaf : m.leaf) out << " " << leaf;
  out << "\n";
  return out.str();
}

}  // namespace ehig
