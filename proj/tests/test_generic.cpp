#include <doctest.h>

#include "dcg/core.hpp"
#include "dcg/errors.hpp"
#include "dcg/generic.hpp"
#include "dcg/oracle.hpp"
#include "support/brute_force.hpp"

using namespace dcg;

namespace {

const std::vector<Color> kPalette123{Color(1), Color(2), Color(3)};

ColoredGraph k2(int c) {
  return ColoredGraph::from_edges({"a", "b"}, std::vector<ColoredGraph::Edge>{{"a", "b", c}});
}

// Palette-restricted (II) up to base size 2, written out directly from the
// definition with the restatement as the validity test.
bool generic_by_brute_force(const ColoredGraph& g, const std::vector<Color>& pal) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& c : pal) {
      bool found = false;
      for (std::size_t w = 0; w < n && !found; ++w) found = w != a && g.color(a, w) == c;
      if (!found) return false;
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      for (const auto& ca : pal) {
        for (const auto& cb : pal) {
          if (!testing::exactly_two_equal_third_larger(ca, cb, g.color(a, b))) continue;
          bool found = false;
          for (std::size_t w = 0; w < n && !found; ++w) {
            found = w != a && w != b && g.color(a, w) == ca && g.color(b, w) == cb;
          }
          if (!found) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("property I") {
  CHECK(check_property_I(k2(1)));
  const auto mono = ColoredGraph::from_edges(
      {"a", "b", "c"}, std::vector<ColoredGraph::Edge>{{"a", "b", 1}, {"a", "c", 1}, {"b", "c", 1}});
  CHECK_FALSE(check_property_I(mono));
  const VertexSet names{"a", "b", "c", "d"};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (const auto& g : testing::all_colorings(VertexSet(names.begin(), names.begin() + n), m)) {
        CHECK(check_property_I(g) == testing::every_substructure_valid(g));
      }
    }
  }
}

TEST_CASE("enumerate_extensions") {
  const std::vector<Color> pal{Color(1), Color(2)};
  CHECK(order_type_palette(pal) == std::vector<Color>{Color(1), Color::parse("3/2"), Color(2), Color(3)});
  const auto g = k2(1);
  const auto single = enumerate_extensions(g, {"a"}, pal);
  CHECK(single.size() == 4);
  CHECK(enumerate_extensions(g, {"a"}, pal, TypeSpace::palette_only).size() == 2);
  CHECK_THROWS_AS(enumerate_extensions(g, {}, pal), PreconditionError);

  // Over the edge a-b colored 1: (1, c) and (c, 1) for c > 1, nothing else.
  const auto pair = enumerate_extensions(g, {"a", "b"}, pal);
  CHECK(pair.size() == 6);
  for (const auto& t : pair) {
    CHECK_NOTHROW(check_extension_type(g, t));
    CHECK(testing::valid_by_restatement(extension_graph(g, t)));
  }
}

TEST_CASE("property II checks") {
  const auto report = check_property_II(k2(1), 1, {Color(1)});
  CHECK_FALSE(report.passed);
  REQUIRE(report.missing.size() == 2);  // the value above 1, over each end
  CHECK(report.missing[0].colors.begin()->second == Color(2));

  CHECK(check_property_II(k2(1), 1, {Color(1)}, TypeSpace::palette_only).passed);

  const auto vacuous = check_property_II(k2(1), 0, {Color(1)});
  CHECK(vacuous.passed);
  CHECK(vacuous.vacuous);
}

TEST_CASE("single-color build stops at K2") {
  // Among all valid graphs on up to 3 vertices over one color, only K2 is
  // palette-generic for k = 1 (K3 cannot be valid with one color).
  std::size_t generic = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& g : oracle::enumerate_valid(n, 1, true).graphs) {
      if (check_property_II(g, 1, {Color(1)}, TypeSpace::palette_only).passed) {
        ++generic;
        CHECK(g.size() == 2);
      }
    }
  }
  CHECK(generic == 1);
  const auto built = build_generic({Color(1)}, 1);
  CHECK(built.size() == 2);
  CHECK(build_generic({Color(1)}, 2).size() == 2);
}

TEST_CASE("build_generic for {1,2,3}, k = 2") {
  BuildStats stats;
  const auto g = build_generic(kPalette123, 2, {}, &stats);
  CHECK(check_property_I(g));
  CHECK(check_property_II(g, 2, kPalette123, TypeSpace::palette_only).passed);
  CHECK(generic_by_brute_force(g, kPalette123));
  CHECK(g.size() == 8);
  CHECK(stats.rounds >= 1);
  // The order-type check sees the colors the finite build never uses.
  CHECK_FALSE(check_property_II(g, 2, kPalette123, TypeSpace::order_types).passed);
  CHECK(build_generic(kPalette123, 2) == g);
}

TEST_CASE("each repair extends the previous structure") {
  // Rebuilding with a budget of r rounds gives a prefix of the full build.
  const auto full = build_generic(kPalette123, 2);
  for (std::size_t r = 1; r < 4; ++r) {
    BuildOptions options;
    options.max_rounds = r;
    try {
      const auto partial = build_generic(kPalette123, 2, options);
      CHECK(partial == full);
    } catch (const BudgetExhausted& e) {
      CHECK(check_property_I(e.partial()));
      CHECK(induced(full, e.partial().vertices()) == e.partial());
      CHECK(e.remaining_deficit() > 0);
    }
  }
}

TEST_CASE("budget exhaustion is explicit") {
  BuildOptions options;
  options.max_rounds = 0;
  CHECK_THROWS_AS(build_generic(kPalette123, 2, options), BudgetExhausted);
  CHECK_THROWS_AS(build_generic({}, 2), PreconditionError);
  CHECK_THROWS_AS(build_generic(kPalette123, 0), PreconditionError);
}

TEST_CASE("larger palettes") {
  const std::vector<Color> pal{Color(1), Color(2), Color(3), Color(4)};
  const auto g = build_generic(pal, 2);
  CHECK(check_property_II(g, 2, pal, TypeSpace::palette_only).passed);
  CHECK(generic_by_brute_force(g, pal));
  const std::vector<Color> frac{Color::parse("1/2"), Color(1), Color::parse("5/2")};
  const auto h = build_generic(frac, 1, {.max_rounds = std::nullopt, .naming_seed = 3});
  CHECK(check_property_II(h, 1, frac, TypeSpace::palette_only).passed);
}

TEST_CASE("one_step_back_and_forth") {
  const auto g = build_generic(kPalette123, 2);
  const VertexMap id{{g.vertices()[0], g.vertices()[0]}};
  const auto ext = one_step_back_and_forth(g, g, id, {Side::left, g.vertices()[3]});
  REQUIRE(ext);
  CHECK(ext->at(g.vertices()[3]) == g.vertices()[3]);
  const auto back = one_step_back_and_forth(g, g, id, {Side::right, g.vertices()[5]});
  REQUIRE(back);
  CHECK(back->at(g.vertices()[5]) == g.vertices()[5]);
  CHECK(one_step_back_and_forth(g, g, id, {Side::left, g.vertices()[0]}) == id);

  // K2 only carries color 1, so a challenge at color 2 from the image of a
  // has no partner.
  const auto other = k2(1);
  const VertexMap p{{g.vertices()[0], "a"}};
  std::size_t color_two = 0;
  for (const auto& x : g.vertices()) {
    if (x == g.vertices()[0] || g.color(g.vertices()[0], x) != Color(2)) continue;
    ++color_two;
    CHECK_FALSE(one_step_back_and_forth(g, other, p, {Side::left, x}));
  }
  CHECK(color_two > 0);
  CHECK_FALSE(back_and_forth_to_depth(g, other, 2));
  CHECK_THROWS_AS(one_step_back_and_forth(g, g, {{g.vertices()[0], "nope"}}, {Side::left, g.vertices()[1]}),
                  PreconditionError);
}

TEST_CASE("builds with different naming seeds are back-and-forth equivalent") {
  const auto a = build_generic(kPalette123, 2, {.max_rounds = std::nullopt, .naming_seed = 1});
  const auto b = build_generic(kPalette123, 2, {.max_rounds = std::nullopt, .naming_seed = 2});
  CHECK(a.vertices() != b.vertices());
  CHECK(back_and_forth_to_depth(a, b, 2));
  CHECK(back_and_forth_to_depth(a, b, 3));
  CHECK(iso_check(a, b).has_value());
}
