#pragma once
// Line-based text formats: graphs, interval hypergraphs, model dumps,
// recognition certificates and set-system dumps. '#' starts a comment,
// blank lines are ignored, parse errors carry line and column.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ehig/canonical.hpp"
#include "ehig/graph.hpp"
#include "ehig/hypergraph.hpp"
#include "ehig/models.hpp"
#include "ehig/recognize.hpp"

namespace ehig {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& what, int line_, int column_);
};

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

IntervalHypergraph parse_hypergraph(std::istream& in);
IntervalHypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const IntervalHypergraph& h);

// Hypergraph format plus "# z", "# sep" and "# map" comment lines, so the
// dump feeds straight back into the hypergraph commands.
std::string format_model(const StretchedModel& m);

std::string format_certificate(const RecognitionCertificate& cert);
std::string format_certificate_json(const RecognitionCertificate& cert);

std::string format_set_system(const SetSystemModel& m);
std::string format_subtree_model(const Graph& g, const SubtreeModel& m);

}  // namespace ehig
