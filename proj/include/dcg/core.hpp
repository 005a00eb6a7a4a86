#pragma once

#include <optional>
#include <map>
#include <vector>

#include "dcg/colored_graph.hpp"

namespace dcg {

/// The distinction law for one triangle, written from the apex whose edges
/// are `apex_left` and `apex_right`: if those differ the opposite edge is
/// their minimum, otherwise the opposite edge is strictly larger. Holding
/// from one apex is equivalent to holding from all three.
template <typename T>
constexpr bool triangle_law_holds(const T& apex_left, const T& apex_right, const T& opposite) {
  if (apex_left != apex_right) return opposite == (apex_left < apex_right ? apex_left : apex_right);
  return apex_left < opposite;
}

struct Violation {
  Vertex a, b, c;  // a < b < c
  Color ab, ac, bc;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Lists every unordered triple breaking the triangle law, in lexicographic
/// order of (a, b, c).
ValidationReport validate(const ColoredGraph& g);

/// Throws PreconditionError (mentioning `what`) if `g` fails validation.
void require_valid(const ColoredGraph& g, const char* what);

/// Restriction of `g` to `subset`. The subset must be non-empty and contained
/// in vertices(g).
ColoredGraph induced(const ColoredGraph& g, const VertexSet& subset);

/// Ascending, duplicate-free list of the colors used on edges.
std::vector<Color> palette(const ColoredGraph& g);

using VertexMap = std::map<Vertex, Vertex>;

/// A color-preserving bijection g1 -> g2 if one exists. Among all such maps
/// the result is the lexicographically least sequence of images taken in
/// g1's vertex order.
std::optional<VertexMap> iso_check(const ColoredGraph& g1, const ColoredGraph& g2);

}  // namespace dcg
