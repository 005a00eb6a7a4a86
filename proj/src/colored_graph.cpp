#include "dcg/colored_graph.hpp"

#include <algorithm>

#include "dcg/errors.hpp"

namespace dcg {

VertexSet make_vertex_set(std::vector<Vertex> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

void check_vertex_name(std::string_view name) {
  if (name.empty()) throw StructuralError("empty vertex name");
  for (const char ch : name) {
    const auto byte = static_cast<unsigned char>(ch);
    if (byte <= 0x20 || byte == 0x7f || ch == ',' || ch == '=') {
      throw StructuralError("vertex name '" + std::string(name) + "' contains a reserved character");
    }
  }
}

VertexSet ColoredGraph::make_checked_vertices(std::vector<Vertex> vertices) {
  for (const auto& v : vertices) check_vertex_name(v);
  std::sort(vertices.begin(), vertices.end());
  const auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end()) throw StructuralError("duplicate vertex '" + *dup + "'");
  return vertices;
}

ColoredGraph ColoredGraph::from_edges(std::vector<Vertex> vertices, std::span<const Edge> edges) {
  ColoredGraph g(make_checked_vertices(std::move(vertices)));
  const std::size_t n = g.vertices_.size();
  const std::size_t pairs = n > 1 ? n * (n - 1) / 2 : 0;
  std::vector<std::optional<Color>> slots(pairs);
  for (const auto& e : edges) {
    const auto i = g.index_of(e.u);
    const auto j = g.index_of(e.v);
    if (!i || !j) throw StructuralError("edge " + e.u + " " + e.v + " names an unknown vertex");
    if (*i == *j) throw StructuralError("self-loop on '" + e.u + "'");
    auto& slot = slots[g.slot(*i, *j)];
    if (slot) throw StructuralError("edge " + e.u + " " + e.v + " given twice");
    slot = e.color;
  }
  g.colors_.reserve(pairs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& slot = slots[g.slot(i, j)];
      if (!slot) {
        throw StructuralError("missing edge " + g.vertices_[i] + " " + g.vertices_[j]);
      }
      g.colors_.push_back(std::move(*slot));
    }
  }
  return g;
}

std::optional<std::size_t> ColoredGraph::index_of(std::string_view name) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

const Color& ColoredGraph::color(std::string_view u, std::string_view v) const {
  const auto i = index_of(u);
  const auto j = index_of(v);
  if (!i || !j) throw PreconditionError("no edge " + std::string(u) + " " + std::string(v));
  if (*i == *j) throw PreconditionError("no color on the diagonal (" + std::string(u) + ")");
  return color(*i, *j);
}

std::vector<ColoredGraph::Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(colors_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      out.push_back({vertices_[i], vertices_[j], color(i, j)});
    }
  }
  return out;
}

ColoredGraph ColoredGraph::with_vertex(const Vertex& name,
                                       const std::map<Vertex, Color>& colors) const {
  check_vertex_name(name);
  if (contains(name)) throw PreconditionError("vertex '" + name + "' already present");
  if (colors.size() != vertices_.size()) {
    throw PreconditionError("new vertex '" + name + "' needs a color to every existing vertex");
  }
  std::vector<Vertex> names = vertices_;
  names.push_back(name);
  ColoredGraph out(make_checked_vertices(std::move(names)));
  const std::size_t pos = *out.index_of(name);
  auto old_index = [pos](std::size_t k) { return k < pos ? k : k - 1; };
  const std::size_t n = out.vertices_.size();
  out.colors_.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i == pos || j == pos) {
        const Vertex& other = out.vertices_[i == pos ? j : i];
        const auto it = colors.find(other);
        if (it == colors.end()) {
          throw PreconditionError("no color given between '" + name + "' and '" + other + "'");
        }
        out.colors_.push_back(it->second);
      } else {
        out.colors_.push_back(color(old_index(i), old_index(j)));
      }
    }
  }
  return out;
}

}  // namespace dcg
