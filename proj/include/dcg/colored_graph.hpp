#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcg/color.hpp"

namespace dcg {

using Vertex = std::string;

/// Sorted, duplicate-free list of vertex names.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates `names`.
VertexSet make_vertex_set(std::vector<Vertex> names);

/// Throws StructuralError unless `name` is usable in the text formats:
/// non-empty, no whitespace or control bytes, no ',' or '='.
void check_vertex_name(std::string_view name);

/// A complete graph on a finite vertex set whose edges carry colors.
///
/// Structurally the edge map is always total, symmetric and loop-free; the
/// triangle law is *not* enforced here (see validate()), so a ColoredGraph
/// may be a candidate that fails validation. Values are immutable.
class ColoredGraph {
 public:
  struct Edge {
    Vertex u;
    Vertex v;
    Color color;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  ColoredGraph() = default;

  /// Builds from an explicit edge list. Every unordered pair of distinct
  /// vertices must appear exactly once (in either orientation).
  static ColoredGraph from_edges(std::vector<Vertex> vertices, std::span<const Edge> edges);

  /// Builds from a color function over vertex indices (i < j) of the sorted
  /// vertex list.
  template <typename ColorOf>
  static ColoredGraph build(std::vector<Vertex> vertices, ColorOf&& color_of) {
    ColoredGraph g(make_checked_vertices(std::move(vertices)));
    const std::size_t n = g.vertices_.size();
    if (n > 1) g.colors_.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g.colors_.push_back(Color(color_of(i, j)));
    }
    return g;
  }

  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Color of the edge between vertex indices i != j.
  const Color& color(std::size_t i, std::size_t j) const { return colors_[slot(i, j)]; }
  /// Color of the edge between named vertices; throws PreconditionError for
  /// unknown names or u == v.
  const Color& color(std::string_view u, std::string_view v) const;

  /// Edges in canonical order: u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  /// Returns this graph plus `name`, joined to every existing vertex with the
  /// color given in `colors` (which must cover exactly the current vertices).
  ColoredGraph with_vertex(const Vertex& name, const std::map<Vertex, Color>& colors) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  explicit ColoredGraph(VertexSet vertices) : vertices_(std::move(vertices)) {}

  static VertexSet make_checked_vertices(std::vector<Vertex> vertices);

  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // Row-major upper triangle without the diagonal.
    return i * (2 * vertices_.size() - i - 1) / 2 + (j - i - 1);
  }

  VertexSet vertices_;
  std::vector<Color> colors_;
};

}  // namespace dcg
