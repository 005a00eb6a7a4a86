#pragma once

#include <algorithm>
#include <vector>

#include "dcg/colored_graph.hpp"
#include "dcg/core.hpp"

namespace dcg::testing {

/// The distinction law stated directly: exactly two of the three colors are
/// equal and the remaining one is larger than them.
template <typename T>
bool exactly_two_equal_third_larger(const T& x, const T& y, const T& z) {
  const int equal_pairs = (x == y) + (x == z) + (y == z);
  if (equal_pairs != 1) return false;
  if (x == y) return x < z;
  if (x == z) return x < y;
  return y < x;
}

/// Validity by the direct restatement, over every triple.
inline bool valid_by_restatement(const ColoredGraph& g) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      for (std::size_t c = b + 1; c < g.size(); ++c) {
        if (!exactly_two_equal_third_larger(g.color(a, b), g.color(a, c), g.color(b, c))) return false;
      }
    }
  }
  return true;
}

/// Property (I) checked literally: every induced substructure of size >= 3
/// is valid by the direct restatement.
inline bool every_substructure_valid(const ColoredGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    VertexSet subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) subset.push_back(g.vertices()[i]);
    }
    if (subset.size() >= 3 && !valid_by_restatement(induced(g, subset))) return false;
  }
  return true;
}

/// Every coloring of K_n over {1..m} (valid or not), in odometer order.
inline std::vector<ColoredGraph> all_colorings(const VertexSet& names, std::size_t m) {
  const std::size_t n = names.size();
  const std::size_t edges = n * (n - 1) / 2;
  std::vector<std::size_t> digits(edges, 1);
  std::vector<ColoredGraph> out;
  while (true) {
    std::size_t k = 0;
    std::vector<ColoredGraph::Edge> list;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        list.push_back({names[i], names[j], Color(static_cast<std::int64_t>(digits[k++]))});
      }
    }
    out.push_back(ColoredGraph::from_edges(names, list));
    std::size_t pos = edges;
    while (pos > 0 && digits[pos - 1] == m) digits[--pos] = 1;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

}  // namespace dcg::testing
