#include "dcg/realize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dcg/core.hpp"
#include "dcg/errors.hpp"
#include "text_util.hpp"

namespace dcg {

void check_certificate(const RealizationCertificate& cert) {
  const auto& pos = cert.position_colors;
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (!(pos[i - 1] < pos[i])) throw PreconditionError("position colors must be strictly ascending");
  }
  std::set<std::string_view> seen;
  for (const auto& [v, bits] : cert.strings) {
    check_vertex_name(v);
    if (bits.size() != pos.size()) {
      throw PreconditionError("string for '" + v + "' has length " + std::to_string(bits.size()) +
                              ", expected " + std::to_string(pos.size()));
    }
    if (bits.find_first_not_of("01") != std::string::npos) {
      throw PreconditionError("string for '" + v + "' is not binary");
    }
    if (!seen.insert(bits).second) throw PreconditionError("duplicate string '" + bits + "'");
  }
}

ColoredGraph derive_coloring(const RealizationCertificate& cert) {
  check_certificate(cert);
  std::vector<Vertex> names;
  std::vector<const std::string*> bits;
  for (const auto& [v, s] : cert.strings) {
    names.push_back(v);
    bits.push_back(&s);
  }
  return ColoredGraph::build(std::move(names), [&](std::size_t i, std::size_t j) -> const Color& {
    const auto& a = *bits[i];
    const auto& b = *bits[j];
    const auto diff = std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin();
    return cert.position_colors[static_cast<std::size_t>(diff)];
  });
}

namespace {

struct Split {
  std::size_t vertex;
  Color color;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// `block` is sorted by vertex index, which is vertex-name order.
void bipartition(const ColoredGraph& g, const std::vector<std::size_t>& block,
                 std::vector<Split>& ones, std::set<Color>& split_colors) {
  if (block.size() < 2) return;
  const Color* least = &g.color(block[0], block[1]);
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (g.color(block[i], block[j]) < *least) least = &g.color(block[i], block[j]);
    }
  }
  const Color level = *least;

  std::vector<std::size_t> parent(block.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (level < g.color(block[i], block[j])) parent[find_root(parent, i)] = find_root(parent, j);
    }
  }
  const std::size_t zero_root = find_root(parent, 0);
  std::vector<std::size_t> zero_side, one_side;
  std::optional<std::size_t> one_root;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const std::size_t r = find_root(parent, i);
    if (r == zero_root) {
      zero_side.push_back(block[i]);
      continue;
    }
    if (one_root && *one_root != r) {
      throw InconsistencyError("not bipartite at level " + level.to_string());
    }
    one_root = r;
    one_side.push_back(block[i]);
  }
  if (one_side.empty()) throw InconsistencyError("not bipartite at level " + level.to_string());
  for (const auto u : zero_side) {
    for (const auto v : one_side) {
      if (g.color(u, v) != level) throw InconsistencyError("cross edge above level " + level.to_string());
    }
  }

  split_colors.insert(level);
  for (const auto v : one_side) ones.push_back({v, level});
  bipartition(g, zero_side, ones, split_colors);
  bipartition(g, one_side, ones, split_colors);
}

}  // namespace

RealizationCertificate realize(const ColoredGraph& g) {
  require_valid(g, "realize input");
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Split> ones;
  std::set<Color> split_colors;
  bipartition(g, all, ones, split_colors);

  RealizationCertificate cert;
  cert.position_colors.assign(split_colors.begin(), split_colors.end());
  for (const auto& v : g.vertices()) cert.strings.emplace(v, std::string(cert.position_colors.size(), '0'));
  for (const auto& s : ones) {
    const auto pos = std::lower_bound(cert.position_colors.begin(), cert.position_colors.end(), s.color) -
                     cert.position_colors.begin();
    cert.strings.at(g.vertices()[s.vertex])[static_cast<std::size_t>(pos)] = '1';
  }
  return cert;
}

std::string print_certificate(const RealizationCertificate& cert) {
  std::ostringstream out;
  out << "positions:";
  for (const auto& c : cert.position_colors) out << ' ' << c.to_string();
  out << '\n';
  for (const auto& [v, bits] : cert.strings) {
    out << "string " << v;
    if (!bits.empty()) out << ' ' << bits;
    out << '\n';
  }
  return out.str();
}

RealizationCertificate parse_certificate(std::string_view text) {
  RealizationCertificate cert;
  bool seen_positions = false;
  std::size_t line_no = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (tokens[0] == "format:") {
      if (tokens.size() != 2 || tokens[1] != "cert-v1") throw ParseError("expected 'format: cert-v1'" + where);
    } else if (tokens[0] == "positions:") {
      if (seen_positions) throw ParseError("duplicate positions line" + where);
      seen_positions = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) cert.position_colors.push_back(Color::parse(tokens[i]));
    } else if (tokens[0] == "string") {
      if (tokens.size() != 2 && tokens.size() != 3) throw ParseError("expected 'string <vertex> <bits>'" + where);
      const std::string bits = tokens.size() == 3 ? tokens[2] : std::string();
      if (!cert.strings.emplace(tokens[1], bits).second) {
        throw ParseError("duplicate vertex '" + tokens[1] + "'" + where);
      }
    } else {
      throw ParseError("unrecognized line '" + std::string(line) + "'" + where);
    }
  }
  if (!seen_positions) throw ParseError("missing 'positions:' line");
  try {
    check_certificate(cert);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return cert;
}

}  // namespace dcg
