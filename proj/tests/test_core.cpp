#include <doctest.h>

#include <random>

#include "dcg/core.hpp"
#include "dcg/dcg_format.hpp"
#include "dcg/errors.hpp"
#include "support/brute_force.hpp"
#include "support/random_instances.hpp"

using namespace dcg;

namespace {

ColoredGraph k3(int ab, int ac, int bc) {
  const std::vector<ColoredGraph::Edge> e{{"a", "b", ab}, {"a", "c", ac}, {"b", "c", bc}};
  return ColoredGraph::from_edges({"a", "b", "c"}, e);
}

}  // namespace

TEST_CASE("color parsing and printing") {
  CHECK(Color::parse("7/2").to_string() == "7/2");
  CHECK(Color::parse("6/4").to_string() == "3/2");
  CHECK(Color::parse("-4/2").to_string() == "-2");
  CHECK(Color::parse("5") == Color(5));
  CHECK(Color::parse("1/3") < Color::parse("1/2"));
  CHECK(Color::parse("123456789012345678901234567891/7").to_string() == "123456789012345678901234567891/7");
  CHECK_THROWS_AS(Color::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Color::parse("x"), ParseError);
  CHECK_THROWS_AS(Color::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Color::parse(""), ParseError);
  CHECK(midpoint(Color(1), Color(2)) == Color::parse("3/2"));
  CHECK(fresh_above({}) == Color(1));
  const std::vector<Color> used{Color(3), Color::parse("7/2"), Color(1)};
  CHECK(fresh_above(used) == Color::parse("9/2"));
}

TEST_CASE("color order matches exact rational order across the 64-bit boundary") {
  const std::vector<std::string> literals{
      "0", "1", "-1", "1/2", "-1/2", "3/7", "9223372036854775807", "-9223372036854775808",
      "9223372036854775808", "-9223372036854775809", "9223372036854775807/9223372036854775806",
      "9223372036854775808/9223372036854775807", "1/9223372036854775807", "1/9223372036854775808",
      "123456789012345678901234567891/7", "-123456789012345678901234567891/7",
      "18446744073709551616/18446744073709551615", "2/4", "18446744073709551616/18446744073709551616"};
  std::vector<Color> colors;
  for (const auto& l : literals) colors.push_back(Color::parse(l));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> any;
  for (int i = 0; i < 200; ++i) {
    const auto den = any(rng);
    colors.emplace_back(Color::Integer(any(rng)), Color::Integer(den == 0 ? 1 : den));
    colors.emplace_back(Color::Integer(any(rng)) * any(rng), Color::Integer(3));
  }
  for (const auto& a : colors) {
    for (const auto& b : colors) {
      CHECK((a == b) == (a.value() == b.value()));
      CHECK((a < b) == (a.value() < b.value()));
    }
  }
  CHECK(Color::parse("2/4") == Color::parse("1/2"));
  CHECK(Color::parse("18446744073709551616/18446744073709551616") == Color(1));
}

TEST_CASE("structural errors") {
  const std::vector<ColoredGraph::Edge> missing{{"a", "b", 1}};
  CHECK_THROWS_AS(ColoredGraph::from_edges({"a", "b", "c"}, missing), StructuralError);
  const std::vector<ColoredGraph::Edge> loop{{"a", "a", 1}};
  CHECK_THROWS_AS(ColoredGraph::from_edges({"a"}, loop), StructuralError);
  const std::vector<ColoredGraph::Edge> twice{{"a", "b", 1}, {"b", "a", 1}};
  CHECK_THROWS_AS(ColoredGraph::from_edges({"a", "b"}, twice), StructuralError);
  CHECK_THROWS_AS(ColoredGraph::from_edges({"a", "a"}, {}), StructuralError);
  CHECK_THROWS_AS(ColoredGraph::from_edges({"a b"}, {}), StructuralError);
  CHECK_THROWS_AS(ColoredGraph::from_edges({"x,y"}, {}), StructuralError);
}

TEST_CASE("validate examples") {
  CHECK(validate(k3(1, 1, 2)).valid());
  const auto mono = validate(k3(1, 1, 1));
  REQUIRE(mono.violations.size() == 1);
  CHECK(mono.violations[0].a == "a");
  CHECK(mono.violations[0].bc == Color(1));
  CHECK(validate(k3(1, 2, 3)).violations.size() == 1);
  const std::vector<ColoredGraph::Edge> one{{"a", "b", Color::parse("7/2")}};
  CHECK(validate(ColoredGraph::from_edges({"a", "b"}, one)).valid());
  // Two equal but the odd edge smaller.
  CHECK_FALSE(validate(k3(2, 2, 1)).valid());
}

TEST_CASE("validator agrees with the direct restatement on all small colorings") {
  const VertexSet names{"p", "q", "r", "s"};
  for (auto [n, m] : {std::pair{3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
    const VertexSet use(names.begin(), names.begin() + n);
    for (const auto& g : testing::all_colorings(use, m)) {
      CHECK(validate(g).valid() == testing::valid_by_restatement(g));
    }
  }
}

TEST_CASE("no valid graph has a monochromatic or all-distinct triangle") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_valid_graph(rng, 12);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b)
        for (std::size_t c = b + 1; c < g.size(); ++c) {
          const auto &x = g.color(a, b), &y = g.color(a, c), &z = g.color(b, c);
          CHECK_FALSE((x == y && y == z));
          CHECK_FALSE((x != y && y != z && x != z));
        }
  }
}

TEST_CASE("note after the class definition: a short edge forces a short edge") {
  // If f(a,b) = m then min{f(a,c), f(b,c)} <= m.
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_valid_graph(rng, 10);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        for (std::size_t c = 0; c < g.size(); ++c) {
          if (a == b || a == c || b == c) continue;
          CHECK(std::min(g.color(a, c), g.color(b, c)) <= g.color(a, b));
        }
  }
}

TEST_CASE("induced") {
  const auto g = k3(1, 1, 2);
  const auto ab = induced(g, {"a", "b"});
  CHECK(ab.vertices() == VertexSet{"a", "b"});
  CHECK(ab.color("a", "b") == Color(1));
  CHECK(induced(g, g.vertices()) == g);
  CHECK_THROWS_AS(induced(g, {}), PreconditionError);
  CHECK_THROWS_AS(induced(g, {"a", "z"}), PreconditionError);

  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto big = testing::random_valid_graph(rng, 15);
    VertexSet subset;
    for (const auto& v : big.vertices()) {
      if (rng() % 2) subset.push_back(v);
    }
    if (subset.empty()) subset.push_back(big.vertices().front());
    const auto sub = induced(big, subset);
    CHECK(validate(sub).valid());
    const auto pal = palette(big);
    for (const auto& c : palette(sub)) CHECK(std::binary_search(pal.begin(), pal.end(), c));
  }
}

TEST_CASE("palette") {
  CHECK(palette(k3(1, 1, 2)) == std::vector<Color>{Color(1), Color(2)});
  const std::vector<ColoredGraph::Edge> one{{"a", "b", Color::parse("7/2")}};
  CHECK(palette(ColoredGraph::from_edges({"a", "b"}, one)) == std::vector<Color>{Color::parse("7/2")});
}

TEST_CASE("iso_check") {
  const auto g = k3(1, 1, 2);
  const auto self = iso_check(g, g);
  REQUIRE(self);
  for (const auto& [u, v] : *self) CHECK(u == v);

  CHECK_FALSE(iso_check(g, k3(1, 1, 3)));

  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = testing::random_valid_graph(rng, 10);
    // Rename by a random bijection.
    VertexSet targets;
    for (std::size_t i = 0; i < h.size(); ++i) targets.push_back("r" + std::to_string(i));
    std::shuffle(targets.begin(), targets.end(), rng);
    std::map<Vertex, Vertex> r;
    for (std::size_t i = 0; i < h.size(); ++i) r.emplace(h.vertices()[i], targets[i]);
    std::vector<ColoredGraph::Edge> edges;
    for (const auto& e : h.edges()) edges.push_back({r.at(e.u), r.at(e.v), e.color});
    const auto renamed = ColoredGraph::from_edges(targets, edges);
    const auto map = iso_check(h, renamed);
    REQUIRE(map);
    for (const auto& e : h.edges()) CHECK(renamed.color(map->at(e.u), map->at(e.v)) == e.color);
  }
}

TEST_CASE("iso_check returns the lexicographically least bijection") {
  // a,b,c all pairwise... K3 with f(ab)=2, f(ac)=f(bc)=1 has the swap a<->b.
  const auto g = k3(2, 1, 1);
  const auto map = iso_check(g, g);
  REQUIRE(map);
  CHECK(map->at("a") == "a");
  CHECK(map->at("b") == "b");
}

TEST_CASE("dcg-v1 parsing") {
  const std::string canonical = "format: dcg-v1\nvertices: a b c\nedge a b 1\nedge a c 1\nedge b c 2\n";
  CHECK(print_dcg(parse_dcg(canonical)) == canonical);
  const std::string permuted =
      "# comment\nedge c b 4/2\r\nvertices: c a b\n\nedge a b 1\nformat: dcg-v1\nedge c a 1\n";
  CHECK(print_dcg(parse_dcg(permuted)) == canonical);
  CHECK_THROWS_AS(parse_dcg("vertices: a\n"), ParseError);
  CHECK_THROWS_AS(parse_dcg("format: dcg-v2\nvertices: a\n"), ParseError);
  CHECK_THROWS_AS(parse_dcg("format: dcg-v1\nvertices: a b\nedge a b\n"), ParseError);
  CHECK_THROWS_AS(parse_dcg("format: dcg-v1\nvertices: a b\nedge a b 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_dcg("format: dcg-v1\nvertices: a b c\nedge a b 1\n"), StructuralError);
  CHECK_THROWS_AS(parse_dcg("format: dcg-v1\nvertices: a b\nedge a a 1\n"), StructuralError);
  CHECK(print_dcg(parse_dcg("format: dcg-v1\nvertices: x\n")) == "format: dcg-v1\nvertices: x\n");
}

TEST_CASE("dcg-v1 canonical idempotence on random graphs") {
  testing::Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_valid_graph(rng, 12);
    const auto text = print_dcg(g);
    CHECK(parse_dcg(text) == g);
    CHECK(print_dcg(parse_dcg(text)) == text);
  }
}
