#include <algorithm>
#include <functional>

#include "dcg/core.hpp"
#include "dcg/errors.hpp"

namespace dcg {

namespace {

// Replaces every edge color by its rank in the palette; the law only looks at
// order, so triangles can be checked on integers.
std::vector<std::uint32_t> rank_matrix(const ColoredGraph& g, const std::vector<Color>& pal) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> ranks(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = static_cast<std::uint32_t>(
          std::lower_bound(pal.begin(), pal.end(), g.color(i, j)) - pal.begin());
      ranks[i * n + j] = ranks[j * n + i] = r;
    }
  }
  return ranks;
}

}  // namespace

ValidationReport validate(const ColoredGraph& g) {
  ValidationReport report;
  const std::size_t n = g.size();
  if (n < 3) return report;
  const auto ranks = rank_matrix(g, palette(g));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto ab = ranks[a * n + b];
      for (std::size_t c = b + 1; c < n; ++c) {
        if (triangle_law_holds(ab, ranks[a * n + c], ranks[b * n + c])) continue;
        const auto& names = g.vertices();
        report.violations.push_back(
            {names[a], names[b], names[c], g.color(a, b), g.color(a, c), g.color(b, c)});
      }
    }
  }
  return report;
}

void require_valid(const ColoredGraph& g, const char* what) {
  const auto report = validate(g);
  if (report.valid()) return;
  const auto& v = report.violations.front();
  throw PreconditionError(std::string(what) + " breaks the triangle law at (" + v.a + ", " + v.b +
                          ", " + v.c + ")");
}

ColoredGraph induced(const ColoredGraph& g, const VertexSet& subset) {
  if (subset.empty()) throw PreconditionError("induced: empty vertex subset");
  const VertexSet sorted = make_vertex_set(subset);
  std::vector<std::size_t> idx;
  idx.reserve(sorted.size());
  for (const auto& v : sorted) {
    const auto i = g.index_of(v);
    if (!i) throw PreconditionError("induced: '" + v + "' is not a vertex");
    idx.push_back(*i);
  }
  return ColoredGraph::build(sorted, [&](std::size_t i, std::size_t j) -> const Color& {
    return g.color(idx[i], idx[j]);
  });
}

std::vector<Color> palette(const ColoredGraph& g) {
  std::vector<Color> out;
  const std::size_t n = g.size();
  out.reserve(n * n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(g.color(i, j));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<VertexMap> iso_check(const ColoredGraph& g1, const ColoredGraph& g2) {
  const std::size_t n = g1.size();
  if (n != g2.size()) return std::nullopt;

  // Per-vertex sorted incident colors must agree for any candidate pair.
  auto profile = [](const ColoredGraph& g, std::size_t v) {
    std::vector<Color> out;
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (u != v) out.push_back(g.color(u, v));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::vector<Color>> p1(n), p2(n);
  for (std::size_t v = 0; v < n; ++v) {
    p1[v] = profile(g1, v);
    p2[v] = profile(g2, v);
  }

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || p1[v] != p2[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g1.color(u, v) == g2.color(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  VertexMap out;
  for (std::size_t v = 0; v < n; ++v) out.emplace(g1.vertices()[v], g2.vertices()[image[v]]);
  return out;
}

}  // namespace dcg
