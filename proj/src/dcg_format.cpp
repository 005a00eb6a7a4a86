#include "dcg/dcg_format.hpp"

#include <optional>
#include <sstream>

#include "dcg/errors.hpp"
#include "text_util.hpp"

namespace dcg {

ColoredGraph parse_dcg(std::string_view text) {
  bool seen_format = false;
  std::optional<std::vector<Vertex>> vertices;
  std::vector<ColoredGraph::Edge> edges;

  std::size_t line_no = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (tokens[0] == "format:") {
      if (seen_format) throw ParseError("duplicate format line" + where);
      if (tokens.size() != 2 || tokens[1] != "dcg-v1") {
        throw ParseError("unsupported format, expected 'format: dcg-v1'" + where);
      }
      seen_format = true;
    } else if (tokens[0] == "vertices:") {
      if (vertices) throw ParseError("duplicate vertices line" + where);
      vertices.emplace(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) throw ParseError("expected 'edge <u> <v> <color>'" + where);
      edges.push_back({tokens[1], tokens[2], Color::parse(tokens[3])});
    } else {
      throw ParseError("unrecognized line '" + std::string(line) + "'" + where);
    }
  }
  if (!seen_format) throw ParseError("missing 'format: dcg-v1' line");
  if (!vertices) throw ParseError("missing 'vertices:' line");
  return ColoredGraph::from_edges(std::move(*vertices), edges);
}

std::string print_dcg(const ColoredGraph& g) {
  std::ostringstream out;
  out << "format: dcg-v1\n";
  out << "vertices:";
  for (const auto& v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.u << ' ' << e.v << ' ' << e.color.to_string() << '\n';
  return out.str();
}

}  // namespace dcg
