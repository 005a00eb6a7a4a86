#include "dcg/generic.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dcg/core.hpp"
#include "dcg/selector.hpp"

namespace dcg {

bool check_property_I(const ColoredGraph& g) { return validate(g).valid(); }

std::vector<Color> order_type_palette(const std::vector<Color>& palette) {
  std::vector<Color> sorted = palette;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Color> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out.push_back(midpoint(sorted[i - 1], sorted[i]));
    out.push_back(sorted[i]);
  }
  out.push_back(fresh_above(sorted));
  return out;
}

namespace {

Vertex unused_name(const ColoredGraph& g) {
  Vertex name = "new";
  for (std::size_t i = 0; g.contains(name); ++i) name = "new" + std::to_string(i);
  return name;
}

std::vector<Color> type_colors(const std::vector<Color>& palette, TypeSpace space) {
  if (space == TypeSpace::order_types) return order_type_palette(palette);
  std::vector<Color> out = palette;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Subsets of {0..n-1} of the given size in lexicographic order.
void for_each_subset(std::size_t n, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick(size);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == size) {
      visit(pick);
      return;
    }
    for (std::size_t i = from; i + (size - depth) <= n; ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
}

bool realized(const ColoredGraph& g, const ExtensionType& t, const std::vector<std::size_t>& base_idx) {
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (std::find(base_idx.begin(), base_idx.end(), w) != base_idx.end()) continue;
    bool all = true;
    for (std::size_t i = 0; i < base_idx.size() && all; ++i) {
      all = g.color(base_idx[i], w) == t.colors.at(t.base[i]);
    }
    if (all) return true;
  }
  return false;
}

std::vector<ExtensionType> enumerate_over(const ColoredGraph& g, const std::vector<std::size_t>& base_idx,
                                          const std::vector<Color>& colors, const Vertex& new_name) {
  std::vector<ExtensionType> out;
  std::vector<std::size_t> choice(base_idx.size());
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == base_idx.size()) {
      ExtensionType t;
      t.new_vertex = new_name;
      for (std::size_t i = 0; i < base_idx.size(); ++i) {
        t.base.push_back(g.vertices()[base_idx[i]]);
        t.colors.emplace(t.base.back(), colors[choice[i]]);
      }
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t c = 0; c < colors.size(); ++c) {
      choice[depth] = c;
      bool ok = true;
      // Triangle (base[i], base[depth], new) from the apex at the new vertex.
      for (std::size_t i = 0; i < depth && ok; ++i) {
        ok = triangle_law_holds(colors[choice[i]], colors[c], g.color(base_idx[i], base_idx[depth]));
      }
      if (ok) rec(depth + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::size_t> indices_of(const ColoredGraph& g, const VertexSet& base) {
  std::vector<std::size_t> idx;
  for (const auto& v : base) {
    const auto i = g.index_of(v);
    if (!i) throw PreconditionError("base vertex '" + v + "' not in graph");
    idx.push_back(*i);
  }
  return idx;
}

}  // namespace

std::vector<ExtensionType> enumerate_extensions(const ColoredGraph& g, const VertexSet& base,
                                                const std::vector<Color>& palette, TypeSpace space) {
  if (base.empty()) throw PreconditionError("extension base must be non-empty");
  const VertexSet sorted = make_vertex_set(base);
  return enumerate_over(g, indices_of(g, sorted), type_colors(palette, space), unused_name(g));
}

GenericityReport check_property_II(const ColoredGraph& g, std::size_t k,
                                   const std::vector<Color>& palette, TypeSpace space) {
  GenericityReport report;
  report.k = k;
  report.palette = palette;
  report.space = space;
  report.vacuous = k == 0 || g.empty();
  const auto colors = type_colors(palette, space);
  const Vertex new_name = unused_name(g);
  for (std::size_t size = 1; size <= std::min(k, g.size()); ++size) {
    for_each_subset(g.size(), size, [&](const std::vector<std::size_t>& base_idx) {
      for (auto& t : enumerate_over(g, base_idx, colors, new_name)) {
        if (!realized(g, t, base_idx)) report.missing.push_back(std::move(t));
      }
    });
  }
  report.passed = report.missing.empty();
  return report;
}

std::string format_report(const GenericityReport& report) {
  std::ostringstream out;
  out << "k: " << report.k << '\n';
  out << "palette:";
  for (const auto& c : report.palette) out << ' ' << c.to_string();
  out << '\n';
  out << "types: " << (report.space == TypeSpace::order_types ? "order" : "palette") << '\n';
  if (report.vacuous) out << "vacuous: no base of size 1.." << report.k << '\n';
  out << "deficits: " << report.missing.size() << '\n';
  for (const auto& t : report.missing) {
    out << "missing";
    for (const auto& a : t.base) out << ' ' << a << '=' << t.colors.at(a).to_string();
    out << '\n';
  }
  out << "passed: " << (report.passed ? "yes" : "no") << '\n';
  return out.str();
}

BudgetExhausted::BudgetExhausted(ColoredGraph partial, std::size_t remaining)
    : Error("generic build exhausted its round budget with " + std::to_string(remaining) +
            " deficits left"),
      partial_(std::move(partial)),
      remaining_(remaining) {}

namespace {

class NameGenerator {
 public:
  explicit NameGenerator(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  Vertex next(const ColoredGraph& g) {
    while (true) {
      Vertex name;
      if (seed_ == 0) {
        name = std::to_string(counter_++);
        name = "v" + std::string(name.size() < 3 ? 3 - name.size() : 0, '0') + name;
      } else {
        std::uniform_int_distribution<int> letter(0, 25);
        name = "v";
        for (int i = 0; i < 6; ++i) name.push_back(static_cast<char>('a' + letter(rng_)));
      }
      if (!g.contains(name)) return name;
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::size_t counter_ = 0;
};

}  // namespace

ColoredGraph build_generic(const std::vector<Color>& palette, std::size_t k, const BuildOptions& options,
                           BuildStats* stats) {
  if (palette.empty()) throw PreconditionError("build_generic needs a non-empty palette");
  if (k == 0) throw PreconditionError("build_generic needs k >= 1");

  NameGenerator names(options.naming_seed);
  ColoredGraph g = ColoredGraph::build({names.next(ColoredGraph())}, [](std::size_t, std::size_t) {
    return Color(0);
  });

  auto report = check_property_II(g, k, palette, TypeSpace::palette_only);
  const std::size_t budget = options.max_rounds.value_or(10 * std::max<std::size_t>(1, report.missing.size()));
  BuildStats local;
  BuildStats& st = stats ? *stats : local;
  st = {};

  while (!report.passed) {
    if (st.rounds == budget) throw BudgetExhausted(g, report.missing.size());
    ++st.rounds;
    st.deficits_per_round.push_back(report.missing.size());
    // Deficits arrive sorted by (|base|, base, type); earlier repairs may have
    // realized later ones already.
    for (auto& t : report.missing) {
      if (realized(g, t, indices_of(g, t.base))) continue;
      t.new_vertex = names.next(g);
      g = extend_with_selector(g, t, options.strategy);
    }
    report = check_property_II(g, k, palette, TypeSpace::palette_only);
  }
  return g;
}

namespace {

bool preserves(const ColoredGraph& g1, const ColoredGraph& g2, const VertexMap& p, const Vertex& x,
               const Vertex& y) {
  for (const auto& [u, v] : p) {
    if (u == x || v == y) return false;
    if (g1.color(u, x) != g2.color(v, y)) return false;
  }
  return true;
}

void check_partial_map(const ColoredGraph& g1, const ColoredGraph& g2, const VertexMap& p) {
  std::set<Vertex> image;
  for (const auto& [u, v] : p) {
    if (!g1.contains(u) || !g2.contains(v)) throw PreconditionError("partial map names unknown vertices");
    if (!image.insert(v).second) throw PreconditionError("partial map is not injective");
  }
  for (auto it = p.begin(); it != p.end(); ++it) {
    for (auto jt = std::next(it); jt != p.end(); ++jt) {
      if (g1.color(it->first, jt->first) != g2.color(it->second, jt->second)) {
        throw PreconditionError("partial map does not preserve colors");
      }
    }
  }
}

}  // namespace

std::optional<VertexMap> one_step_back_and_forth(const ColoredGraph& g1, const ColoredGraph& g2,
                                                 const VertexMap& p, const Challenge& challenge) {
  check_partial_map(g1, g2, p);
  if (challenge.side == Side::left) {
    if (!g1.contains(challenge.vertex)) throw PreconditionError("challenge vertex not in left graph");
    if (p.contains(challenge.vertex)) return p;
    if (g2.contains(challenge.vertex) && preserves(g1, g2, p, challenge.vertex, challenge.vertex)) {
      VertexMap out = p;
      out.emplace(challenge.vertex, challenge.vertex);
      return out;
    }
    for (const auto& y : g2.vertices()) {
      if (!preserves(g1, g2, p, challenge.vertex, y)) continue;
      VertexMap out = p;
      out.emplace(challenge.vertex, y);
      return out;
    }
    return std::nullopt;
  }
  if (!g2.contains(challenge.vertex)) throw PreconditionError("challenge vertex not in right graph");
  for (const auto& [u, v] : p) {
    if (v == challenge.vertex) return p;
  }
  if (g1.contains(challenge.vertex) && preserves(g1, g2, p, challenge.vertex, challenge.vertex)) {
    VertexMap out = p;
    out.emplace(challenge.vertex, challenge.vertex);
    return out;
  }
  for (const auto& x : g1.vertices()) {
    if (!preserves(g1, g2, p, x, challenge.vertex)) continue;
    VertexMap out = p;
    out.emplace(x, challenge.vertex);
    return out;
  }
  return std::nullopt;
}

bool back_and_forth_to_depth(const ColoredGraph& g1, const ColoredGraph& g2, std::size_t depth) {
  if (depth == 0) return true;
  // Visit every color-preserving partial injection of size < depth.
  std::function<bool(const VertexMap&, std::size_t)> visit = [&](const VertexMap& p, std::size_t next_left) {
    for (const auto& x : g1.vertices()) {
      if (!one_step_back_and_forth(g1, g2, p, {Side::left, x})) return false;
    }
    for (const auto& y : g2.vertices()) {
      if (!one_step_back_and_forth(g1, g2, p, {Side::right, y})) return false;
    }
    if (p.size() + 1 >= depth) return true;
    for (std::size_t i = next_left; i < g1.size(); ++i) {
      const Vertex& x = g1.vertices()[i];
      for (const auto& y : g2.vertices()) {
        if (!preserves(g1, g2, p, x, y)) continue;
        VertexMap bigger = p;
        bigger.emplace(x, y);
        if (!visit(bigger, i + 1)) return false;
      }
    }
    return true;
  };
  return visit({}, 0);
}

}  // namespace dcg
