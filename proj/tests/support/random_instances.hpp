#pragma once

#include <cstddef>
#include <random>

#include "dcg/amalgam.hpp"
#include "dcg/colored_graph.hpp"
#include "dcg/realize.hpp"

namespace dcg::testing {

using Rng = std::mt19937_64;

/// `length` distinct random rationals, ascending.
std::vector<Color> random_positions(Rng& rng, std::size_t length);

/// A certificate with `n` distinct strings of length `length` (needs
/// 2^length >= n). Strings are grown as a random binary tree so that
/// first differences spread over all positions.
RealizationCertificate random_certificate(Rng& rng, std::size_t n, std::size_t length,
                                          const std::string& prefix = "v");

/// A valid graph with 1..max_n vertices, from a random certificate.
ColoredGraph random_valid_graph(Rng& rng, std::size_t max_n, const std::string& prefix = "v");

/// A valid one-point type over all of g, made by inserting fresh positions
/// into g's realization and drawing a new string.
ExtensionType random_full_extension(Rng& rng, const ColoredGraph& g, const Vertex& new_vertex);

/// random_full_extension restricted to a random non-empty base of size
/// <= max_base.
ExtensionType random_extension(Rng& rng, const ColoredGraph& g, const Vertex& new_vertex,
                               std::size_t max_base);

struct AmalgamationCase {
  ColoredGraph b, c;
  VertexSet shared;
};

/// B and C agree on `shared` and nowhere else; C's extra vertices are built
/// independently of B's.
AmalgamationCase random_amalgamation_case(Rng& rng, std::size_t max_n);

}  // namespace dcg::testing
