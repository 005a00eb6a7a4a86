#pragma once

#include <map>

#include "dcg/colored_graph.hpp"

namespace dcg {

/// A one-point extension type: colors from a new vertex to each vertex of a
/// non-empty base.
struct ExtensionType {
  VertexSet base;
  Vertex new_vertex;
  std::map<Vertex, Color> colors;

  friend bool operator==(const ExtensionType&, const ExtensionType&) = default;
};

/// The graph induced on t.base plus t.new_vertex with t's colors.
ColoredGraph extension_graph(const ColoredGraph& g, const ExtensionType& t);

/// Throws PreconditionError unless t is a well-formed type over g: non-empty
/// base inside vertices(g), colors keyed exactly by the base, new vertex not
/// in g, and the extension graph obeys the triangle law.
void check_extension_type(const ColoredGraph& g, const ExtensionType& t);

/// Adds t.new_vertex to g. Vertices outside the base are colored in
/// lexicographic order: the min rule through any already-colored witness
/// that tells the new vertex and v apart, or a fresh color above everything
/// used so far when no witness exists.
ColoredGraph glue_vertex(const ColoredGraph& g, const ExtensionType& t);

/// Amalgam of b and c over their common part `shared`, which must equal
/// V(b) ∩ V(c) with identical induced colorings. An empty shared part is a
/// joint embedding (see jep()).
ColoredGraph amalgamate(const ColoredGraph& b, const ColoredGraph& c, const VertexSet& shared);

/// Joint embedding of graphs with disjoint vertex sets.
ColoredGraph jep(const ColoredGraph& b, const ColoredGraph& c);

}  // namespace dcg
