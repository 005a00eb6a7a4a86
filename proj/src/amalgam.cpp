#include "dcg/amalgam.hpp"

#include <algorithm>
#include <iterator>

#include "dcg/core.hpp"
#include "dcg/errors.hpp"

namespace dcg {

ColoredGraph extension_graph(const ColoredGraph& g, const ExtensionType& t) {
  return induced(g, t.base).with_vertex(t.new_vertex, t.colors);
}

void check_extension_type(const ColoredGraph& g, const ExtensionType& t) {
  if (t.base.empty()) throw PreconditionError("extension type has an empty base");
  if (make_vertex_set(t.base) != t.base) {
    throw PreconditionError("extension base must be sorted and duplicate-free");
  }
  for (const auto& a : t.base) {
    if (!g.contains(a)) throw PreconditionError("extension base vertex '" + a + "' not in graph");
    if (!t.colors.contains(a)) throw PreconditionError("extension type has no color for '" + a + "'");
  }
  if (t.colors.size() != t.base.size()) {
    throw PreconditionError("extension colors must be keyed exactly by the base");
  }
  if (g.contains(t.new_vertex)) {
    throw PreconditionError("new vertex '" + t.new_vertex + "' already in graph");
  }
  require_valid(extension_graph(g, t), "extension type");
}

ColoredGraph glue_vertex(const ColoredGraph& g, const ExtensionType& t) {
  require_valid(g, "glue_vertex input");
  check_extension_type(g, t);

  std::map<Vertex, Color> colors = t.colors;
  std::vector<Color> used = palette(g);
  for (const auto& [_, c] : colors) used.push_back(c);
  std::vector<std::size_t> colored;
  for (const auto& a : t.base) colored.push_back(*g.index_of(a));

  for (std::size_t v = 0; v < g.size(); ++v) {
    const Vertex& name = g.vertices()[v];
    if (colors.contains(name)) continue;
    std::optional<Color> value;
    for (const std::size_t a : colored) {
      const Color& ab = colors.at(g.vertices()[a]);
      const Color& av = g.color(a, v);
      if (ab == av) continue;
      const Color& m = std::min(ab, av);
      if (!value) {
        value = m;
      } else if (*value != m) {
        throw InconsistencyError("ambiguous min rule for '" + t.new_vertex + "'-'" + name +
                                 "': witnesses give " + value->to_string() + " and " +
                                 m.to_string());
      }
    }
    if (!value) {
      value = fresh_above(used);
      used.push_back(*value);
    }
    colors.emplace(name, *value);
    colored.push_back(v);
  }
  return g.with_vertex(t.new_vertex, colors);
}

namespace {

VertexSet intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Glues the vertices of c outside `base` into `work` one at a time, each
// carrying its c-colors to the base and the earlier glued vertices.
ColoredGraph glue_remaining(ColoredGraph work, const ColoredGraph& c, VertexSet base) {
  for (const auto& v : difference(c.vertices(), base)) {
    ExtensionType t{base, v, {}};
    for (const auto& a : base) t.colors.emplace(a, c.color(a, v));
    work = glue_vertex(work, t);
    base.insert(std::upper_bound(base.begin(), base.end(), v), v);
  }
  return work;
}

void check_restriction(const ColoredGraph& whole, const ColoredGraph& part, const char* what) {
  if (induced(whole, part.vertices()) != part) {
    throw InconsistencyError(std::string(what) + " does not restrict to its input");
  }
}

}  // namespace

ColoredGraph amalgamate(const ColoredGraph& b, const ColoredGraph& c, const VertexSet& shared) {
  const VertexSet common = intersection(b.vertices(), c.vertices());
  if (make_vertex_set(shared) != common) {
    throw PreconditionError("amalgamation base must equal the common vertex set");
  }
  if (common.empty()) return jep(b, c);
  require_valid(b, "amalgamate B");
  require_valid(c, "amalgamate C");
  if (induced(b, common) != induced(c, common)) {
    throw PreconditionError("B and C disagree on the shared part");
  }
  ColoredGraph out = glue_remaining(b, c, common);
  check_restriction(out, b, "amalgam");
  check_restriction(out, c, "amalgam");
  return out;
}

ColoredGraph jep(const ColoredGraph& b, const ColoredGraph& c) {
  if (!intersection(b.vertices(), c.vertices()).empty()) {
    throw PreconditionError("jep needs disjoint vertex sets");
  }
  require_valid(b, "jep B");
  require_valid(c, "jep C");
  if (b.empty()) return c;
  if (c.empty()) return b;

  std::vector<Color> used = palette(b);
  for (const auto& col : palette(c)) used.push_back(col);
  const Vertex& first_b = b.vertices().front();
  const Vertex& first_c = c.vertices().front();
  ColoredGraph work = glue_vertex(b, ExtensionType{{first_b}, first_c, {{first_b, fresh_above(used)}}});
  work = glue_remaining(std::move(work), c, {first_c});
  check_restriction(work, b, "joint embedding");
  check_restriction(work, c, "joint embedding");
  return work;
}

}  // namespace dcg
