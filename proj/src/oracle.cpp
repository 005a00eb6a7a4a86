#include "dcg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "dcg/amalgam.hpp"
#include "dcg/core.hpp"
#include "dcg/realize.hpp"

namespace dcg::oracle {

VertexSet enumeration_vertices(std::size_t n) {
  VertexSet out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

namespace {

constexpr std::uint64_t kCandidateLimit = 100'000'000;

std::uint64_t candidate_count(std::size_t n, std::size_t m) {
  const std::size_t edges = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) {
    total *= m;
    if (total > kCandidateLimit) return total;
  }
  return total;
}

// Counts valid colorings in odometer order, calling visit(graph) on each
// when build_graphs is set.
template <typename Visit>
std::uint64_t for_each_valid(std::size_t n, std::size_t m, Visit&& visit, bool build_graphs = true) {
  if (n < 1 || n > 6 || m < 1 || m > 6) throw BoundExceeded("enumeration needs 1 <= n, m <= 6");
  if (candidate_count(n, m) > kCandidateLimit) {
    throw BoundExceeded("m^C(n,2) exceeds 1e8 candidates for n=" + std::to_string(n) +
                        ", m=" + std::to_string(m));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edge_list;
  std::vector<std::size_t> edge_id(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edge_id[i * n + j] = edge_id[j * n + i] = edge_list.size();
      edge_list.emplace_back(i, j);
    }
  }
  const VertexSet names = enumeration_vertices(n);
  std::vector<std::size_t> digits(edge_list.size(), 1);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        for (std::size_t c = b + 1; c < n && ok; ++c) {
          ok = triangle_law_holds(digits[edge_id[a * n + b]], digits[edge_id[a * n + c]],
                                  digits[edge_id[b * n + c]]);
        }
      }
    }
    if (ok) {
      ++count;
      if (build_graphs) {
        visit(ColoredGraph::build(names, [&](std::size_t i, std::size_t j) {
          return static_cast<std::int64_t>(digits[edge_id[i * n + j]]);
        }));
      }
    }
    // Last edge varies fastest.
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == m) digits[--pos] = 1;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return count;
}

}  // namespace

EnumerationResult enumerate_valid(std::size_t n, std::size_t m, bool materialize) {
  EnumerationResult result;
  result.n = n;
  result.m = m;
  if (materialize) {
    result.count = for_each_valid(n, m, [&](ColoredGraph g) { result.graphs.push_back(std::move(g)); });
  } else {
    result.count = for_each_valid(n, m, [](const ColoredGraph&) {}, false);
  }
  return result;
}

bool verify_realization_exhaustive(std::size_t n, std::size_t m) {
  bool ok = true;
  for_each_valid(n, m, [&](const ColoredGraph& g) {
    if (ok && derive_coloring(realize(g)) != g) ok = false;
  });
  return ok;
}

namespace {

ColoredGraph rename(const ColoredGraph& g, const std::map<Vertex, Vertex>& to) {
  std::vector<ColoredGraph::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({to.at(e.u), to.at(e.v), e.color});
  std::vector<Vertex> names;
  for (const auto& v : g.vertices()) names.push_back(to.at(v));
  return ColoredGraph::from_edges(std::move(names), edges);
}

// Every injective partial map from b's vertices into c's that preserves
// colors, including the empty map.
void for_each_identification(const ColoredGraph& b, const ColoredGraph& c,
                             const std::function<void(const std::map<Vertex, Vertex>&)>& visit) {
  std::map<Vertex, Vertex> current;
  std::vector<bool> used(c.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == b.size()) {
      visit(current);
      return;
    }
    rec(i + 1);  // b's vertex i stays outside the shared part
    const Vertex& x = b.vertices()[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (used[j]) continue;
      const Vertex& y = c.vertices()[j];
      bool ok = true;
      for (const auto& [u, v] : current) ok = ok && b.color(u, x) == c.color(v, y);
      if (!ok) continue;
      used[j] = true;
      current.emplace(x, y);
      rec(i + 1);
      current.erase(x);
      used[j] = false;
    }
  };
  rec(0);
}

bool amalgam_ok(const ColoredGraph& b, const ColoredGraph& c, const VertexSet& shared) {
  try {
    const ColoredGraph d = amalgamate(b, c, shared);
    return validate(d).valid() && induced(d, b.vertices()) == b && induced(d, c.vertices()) == c;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

bool verify_amalgamation_exhaustive(std::size_t n, std::size_t m) {
  if (n < 1 || n > 4 || m < 1 || m > 3) throw BoundExceeded("amalgamation sweep needs n <= 4, m <= 3");
  std::vector<ColoredGraph> pool;
  for (std::size_t size = 1; size <= n; ++size) {
    for_each_valid(size, m, [&](ColoredGraph g) { pool.push_back(std::move(g)); });
  }
  // c's vertices are renamed into a disjoint range before identification.
  std::map<Vertex, Vertex> to_c;
  for (const auto& v : enumeration_vertices(n)) to_c.emplace(v, "c" + v);

  for (const auto& b : pool) {
    for (const auto& c_raw : pool) {
      std::map<Vertex, Vertex> to_c_here;
      for (const auto& v : c_raw.vertices()) to_c_here.emplace(v, to_c.at(v));
      const ColoredGraph c = rename(c_raw, to_c_here);
      bool ok = true;
      for_each_identification(b, c, [&](const std::map<Vertex, Vertex>& ident) {
        if (!ok) return;
        // Shared vertices take b's names inside c.
        std::map<Vertex, Vertex> glue;
        for (const auto& v : c.vertices()) glue.emplace(v, v);
        VertexSet shared;
        for (const auto& [x, y] : ident) {
          glue[y] = x;
          shared.push_back(x);
        }
        ok = amalgam_ok(b, rename(c, glue), make_vertex_set(shared));
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace dcg::oracle
