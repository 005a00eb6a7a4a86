#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dcg/amalgam.hpp"
#include "dcg/colored_graph.hpp"
#include "dcg/core.hpp"
#include "dcg/errors.hpp"
#include "dcg/selector.hpp"

namespace dcg {

/// Which new-vertex colors a one-point type may use.
enum class TypeSpace {
  palette_only,  // exactly the given palette
  order_types,   // palette plus midpoints and one value above the top
};

struct GenericityReport {
  std::size_t k = 0;
  std::vector<Color> palette;
  TypeSpace space = TypeSpace::palette_only;
  std::vector<ExtensionType> missing;
  bool passed = true;
  bool vacuous = false;  // no base of size 1..k exists
};

/// Property (I): every finite substructure lies in the class, i.e. g obeys
/// the triangle law.
bool check_property_I(const ColoredGraph& g);

/// palette plus one midpoint per consecutive pair and palette.back() + 1.
std::vector<Color> order_type_palette(const std::vector<Color>& palette);

/// Every valid one-point type over `base` with colors from the chosen space,
/// in lexicographic order of the color tuple (base in vertex order).
std::vector<ExtensionType> enumerate_extensions(const ColoredGraph& g, const VertexSet& base,
                                                const std::vector<Color>& palette,
                                                TypeSpace space = TypeSpace::order_types);

/// Property (II) restricted to bases of size <= k: each enumerated type must
/// be realized by some vertex outside its base, fixing the base pointwise.
GenericityReport check_property_II(const ColoredGraph& g, std::size_t k,
                                   const std::vector<Color>& palette,
                                   TypeSpace space = TypeSpace::order_types);

std::string format_report(const GenericityReport& report);

struct BuildOptions {
  std::optional<std::size_t> max_rounds;  // default: 10 * initial deficit count
  std::uint64_t naming_seed = 0;          // 0: v000, v001, ...; else random names
  StrategyKind strategy = StrategyKind::greedy_fresh;
};

struct BuildStats {
  std::size_t rounds = 0;
  std::vector<std::size_t> deficits_per_round;  // deficit count seen at the start of each round
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(ColoredGraph partial, std::size_t remaining);
  const ColoredGraph& partial() const { return partial_; }
  std::size_t remaining_deficit() const { return remaining_; }

 private:
  ColoredGraph partial_;
  std::size_t remaining_;
};

/// Saturates a single vertex under palette-restricted property (II) for
/// bases up to size k, repairing each deficit with extend_with_selector.
ColoredGraph build_generic(const std::vector<Color>& palette, std::size_t k,
                           const BuildOptions& options = {}, BuildStats* stats = nullptr);

enum class Side { left, right };

struct Challenge {
  Side side;
  Vertex vertex;
};

/// Extends the color-preserving partial injection p: g1 -> g2 to cover the
/// challenge vertex. The partner is the same-named vertex when that one is
/// admissible, otherwise the least admissible vertex. Returns nothing if no
/// partner preserves every color.
std::optional<VertexMap> one_step_back_and_forth(const ColoredGraph& g1, const ColoredGraph& g2,
                                                 const VertexMap& p, const Challenge& challenge);

/// True if every color-preserving partial injection of size < depth extends
/// for every challenge on either side.
bool back_and_forth_to_depth(const ColoredGraph& g1, const ColoredGraph& g2, std::size_t depth);

}  // namespace dcg
