#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcg/colored_graph.hpp"
#include "dcg/errors.hpp"

namespace dcg::oracle {

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

struct EnumerationResult {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t count = 0;
  std::vector<ColoredGraph> graphs;  // filled only when materialized
};

/// Vertex names used by the enumerator: "a", "b", ... in order.
VertexSet enumeration_vertices(std::size_t n);

/// Every labeled coloring of K_n by {1..m} that passes validate(), in
/// odometer order over the canonical edge list (first edge varies slowest).
/// Requires 1 <= n, m <= 6 and m^C(n,2) <= 1e8.
EnumerationResult enumerate_valid(std::size_t n, std::size_t m, bool materialize);

/// Every valid graph on n vertices over {1..m} round-trips through realize
/// and derive_coloring exactly.
bool verify_realization_exhaustive(std::size_t n, std::size_t m);

/// For all valid B, C with 1..n vertices over {1..m} and every
/// color-preserving identification of a common part (including the empty
/// one), amalgamate succeeds, validates, and restricts to B and C exactly.
/// Requires n <= 4, m <= 3.
bool verify_amalgamation_exhaustive(std::size_t n, std::size_t m);

}  // namespace dcg::oracle
