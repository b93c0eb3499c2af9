#include "ehig/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ehig/canonical.hpp"
#include "ehig/generate.hpp"
#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"
#include "ehig/models.hpp"
#include "ehig/recognize.hpp"
#include "ehig/textio.hpp"

namespace ehig {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

CliquePath reversed(const CliquePath& cp) {
  CliquePath out;
  const int t = cp.length();
  out.cliques.assign(cp.cliques.rbegin(), cp.cliques.rend());
  for (auto [l, r] : cp.ranges) out.ranges.push_back({t + 1 - r, t + 1 - l});
  return out;
}

struct NotInterval {
  CliquePathResult result;
};

// clique path of the twin-reduced graph, plus the reduction itself
std::pair<TwinReduction, CliquePath> reduced_path(const Graph& g) {
  auto first = interval_clique_path(g);
  if (!first.path) throw NotInterval{first};
  auto tr = reduce_twins(g);
  if (tr.merged.empty()) return {std::move(tr), *first.path};
  auto again = interval_clique_path(tr.graph);
  if (!again.path) throw std::logic_error("twin reduction broke the clique path");
  return {std::move(tr), *again.path};
}

int not_interval_exit(const Graph& g, const NotInterval& n, std::ostream& err) {
  if (n.result.reason == IntervalReason::not_chordal) {
    err << "error not an interval graph: chordless cycle found\n";
    err << "hole";
    for (int v : n.result.hole) err << " " << g.labels[v];
    err << "\n";
  } else {
    err << "error not an interval graph: maximal cliques admit no consecutive arrangement\n";
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exactly hittable interval graph toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  bool json = false, skip_twins = false, reverse = false, brute = false;
  int witness_cap = 6, guard = 25;
  std::string kind = "harary";
  std::string family = "random-interval", fixture_name = "fig2";
  int n = 8, points = 15, intervals = 10;
  double edge_prob = 0.3;
  std::uint64_t seed = 1;

  auto* rec = app.add_subcommand("recognize", "decide exactly hittable, with certificate");
  rec->add_option("input", input, "graph file, - for standard input");
  rec->add_flag("--json", json, "machine-readable certificate");
  rec->add_flag("--skip-twin-reduction", skip_twins, "feed the raw graph to the model builder");
  rec->add_option("--witness-cap", witness_cap, "induced path length cap for the fallback");

  auto* can = app.add_subcommand("canonical", "print the canonical stretched model");
  can->add_option("input", input, "graph file, - for standard input");
  can->add_flag("--reverse", reverse, "use the reversed clique path orientation");

  auto* hit = app.add_subcommand("hittable", "decide exact hittability of a hypergraph");
  hit->add_option("input", input, "hypergraph file, - for standard input");
  hit->add_flag("--brute", brute, "exhaustive search instead of the membership solve");
  hit->add_option("--guard", guard, "point-count guard for --brute");

  auto* mm = app.add_subcommand("mmsc", "minimize the maximum hits over all hitting sets");
  mm->add_option("input", input, "hypergraph file, - for standard input");

  auto* wit = app.add_subcommand("witness", "search for a forbidden-structure witness");
  wit->add_option("input", input, "graph file, - for standard input");
  wit->add_option("--cap", witness_cap, "induced path length cap");

  auto* mod = app.add_subcommand("model", "exactly hittable models beyond intervals");
  mod->add_option("input", input, "graph file, - for standard input");
  mod->add_option("--kind", kind, "harary, subtree or clique-tree")
      ->check(CLI::IsMember({"harary", "subtree", "clique-tree"}));

  auto* gen = app.add_subcommand("gen", "seeded generators and fixtures");
  gen->add_option("--family", family,
                  "random-interval, random-proper-interval, random-graph, random-chordal, "
                  "random-hypergraph or paper-fixture")
      ->check(CLI::IsMember({"random-interval", "random-proper-interval", "random-graph",
                             "random-chordal", "random-hypergraph", "paper-fixture"}));
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--edge-prob", edge_prob, "edge probability for random-graph");
  gen->add_option("--fixture", fixture_name, "fig1i, fig1ii, fig2 or fig4-k13");
  gen->add_option("--points", points, "point bound for random-hypergraph");
  gen->add_option("--intervals", intervals, "interval bound for random-hypergraph");

  auto* ora = app.add_subcommand("oracle", "differential check against exhaustive search");
  ora->add_option("input", input, "graph file, - for standard input");
  ora->add_option("--guard", guard, "point-count guard for the exhaustive side");

  std::vector<char*> argv;
  std::string prog = "ehig";
  argv.push_back(prog.data());
  std::vector<std::string> copy(args);
  for (auto& a : copy) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rec->parsed()) {
      Graph g = parse_graph(slurp(input, in));
      auto cert = recognize(g, skip_twins, witness_cap);
      if (cert.verdict == Verdict::invalid_input) {
        err << format_certificate(cert);
        return 2;
      }
      out << (json ? format_certificate_json(cert) : format_certificate(cert));
      return cert.verdict == Verdict::ehig ? 0 : 1;
    }
    if (can->parsed()) {
      Graph g = parse_graph(slurp(input, in));
      try {
        auto [tr, cp] = reduced_path(g);
        auto model = build_canonical(tr.graph, reverse ? reversed(cp) : cp);
        if (!verify_canonical(tr.graph, model))
          throw std::logic_error("canonical model failed verification");
        for (const auto& [from, to] : tr.merged) out << "# merged " << from << " " << to << "\n";
        out << format_model(model);
        return 0;
      } catch (const NotInterval& niv) {
        return not_interval_exit(g, niv, err);
      }
    }
    if (hit->parsed()) {
      IntervalHypergraph h = parse_hypergraph(slurp(input, in));
      std::optional<HittingSet> points_found;
      if (brute) points_found = brute_force_ehs(h, guard);
      else points_found = exactly_hittable(h);
      if (!points_found) {
        out << "exactly-hittable no\n";
        return 1;
      }
      out << "exactly-hittable yes\npoints";
      for (int p : *points_found) out << " " << p;
      out << "\n";
      return 0;
    }
    if (mm->parsed()) {
      IntervalHypergraph h = parse_hypergraph(slurp(input, in));
      auto r = min_membership_hitting(h);
      out << "membership " << r.max_hits << "\npoints";
      for (int p : r.points) out << " " << p;
      out << "\n";
      return r.max_hits <= 1 ? 0 : 1;
    }
    if (wit->parsed()) {
      Graph g = parse_graph(slurp(input, in));
      try {
        auto [tr, cp] = reduced_path(g);
        auto backbone = construct_backbone(cp);
        auto w = extract_forbidden_witness(tr.graph, cp, backbone, witness_cap);
        for (const auto& [from, to] : tr.merged) out << "# merged " << from << " " << to << "\n";
        if (!w) {
          out << "# witness absent within the search caps\n";
          return 1;
        }
        out << "witness-path";
        for (int v : w->path) out << " " << tr.graph.labels[v];
        out << "\nwitness-indep";
        for (int v : w->independents) out << " " << tr.graph.labels[v];
        out << "\n";
        return 0;
      } catch (const NotInterval& niv) {
        return not_interval_exit(g, niv, err);
      }
    }
    if (mod->parsed()) {
      Graph g = parse_graph(slurp(input, in));
      if (kind == "harary") {
        out << format_set_system(harary_model(g));
        return 0;
      }
      if (kind == "clique-tree") {
        auto t = clique_tree(g);
        if (!t) {
          err << "error clique tree needs a connected chordal graph\n";
          return 2;
        }
        for (size_t i = 0; i < t->cliques.size(); ++i) {
          out << "node " << i << " # clique";
          for (int v : t->cliques[i]) out << " " << g.labels[v];
          out << "\n";
        }
        for (auto [i, j] : t->edges) out << "edge " << i << " " << j << "\n";
        return 0;
      }
      try {
        out << format_subtree_model(g, chordal_subtree_model(g));
        return 0;
      } catch (const std::invalid_argument& e) {
        err << "error " << e.what() << "\n";
        return 2;
      }
    }
    if (gen->parsed()) {
      if (family == "paper-fixture") out << format_graph(fixture(fixture_name));
      else if (family == "random-interval") out << format_graph(random_interval_graph(n, seed).graph);
      else if (family == "random-proper-interval")
        out << format_graph(random_proper_interval_graph(n, seed).graph);
      else if (family == "random-graph") out << format_graph(random_graph(n, edge_prob, seed));
      else if (family == "random-chordal") out << format_graph(random_connected_chordal(n, seed));
      else out << format_hypergraph(random_hypergraph(points, intervals, seed));
      return 0;
    }
    // oracle
    Graph g = parse_graph(slurp(input, in));
    auto cert = recognize(g);
    if (cert.verdict == Verdict::invalid_input) {
      err << format_certificate(cert);
      return 2;
    }
    auto exhaustive = brute_force_ehs(cert.model->hypergraph, guard);
    bool poly = cert.verdict == Verdict::ehig;
    out << "recognize " << (poly ? "ehig" : "not-ehig") << "\n";
    out << "brute-force " << (exhaustive ? "ehig" : "not-ehig") << "\n";
    out << (poly == exhaustive.has_value() ? "agree" : "disagree") << "\n";
    return poly == exhaustive.has_value() ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ehig
