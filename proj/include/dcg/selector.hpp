#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcg/amalgam.hpp"
#include "dcg/colored_graph.hpp"

namespace dcg {

/// {u in A : u != pivot, f(u, pivot) = lambda}.
VertexSet selector_step(const ColoredGraph& g, const VertexSet& current, const Vertex& pivot,
                        const Color& lambda);

struct SelectorStep {
  VertexSet set;  // A_alpha, before the step
  Vertex pivot;   // v_alpha
  Color lambda;   // lambda_alpha
};

enum class SelectorClass { good, bad };

struct SelectorTrace {
  VertexSet start;
  std::vector<SelectorStep> steps;
  VertexSet final_set;
  SelectorClass classification = SelectorClass::good;

  /// Index of the step at which `v` drops out (v in A_alpha \ A_alpha+1),
  /// or nothing if it survives to the end or never was in the start set.
  std::optional<std::size_t> leaving_step(const Vertex& v) const;
};

struct SelectorChoice {
  Vertex pivot;
  Color lambda;
};

/// Given the graph, the current set (non-empty) and the previous lambda, a
/// strategy returns the next (pivot, lambda) or nothing to stop.
using SelectorStrategy = std::function<std::optional<SelectorChoice>(
    const ColoredGraph&, const VertexSet&, const std::optional<Color>&)>;

/// Runs a selector from `start` until the set empties or the strategy stops.
/// A pivot outside the current set or a non-increasing lambda throws
/// PreconditionError.
SelectorTrace run_selector(const ColoredGraph& g, const VertexSet& start,
                           const SelectorStrategy& strategy);

enum class StrategyKind { greedy_fresh, stress };

std::string to_string(StrategyKind kind);
StrategyKind parse_strategy_kind(const std::string& name);

/// greedy_fresh: least vertex and `fresh` in one step.
/// stress: least vertex and the smallest palette color above `floor` (and the
/// previous lambda) that keeps the set non-empty; `fresh` once none does.
/// `fresh` must exceed every color of the graph.
SelectorStrategy make_strategy(StrategyKind kind, const Color& floor, const Color& fresh);

/// Everything the selector-driven extension computes before it commits to a
/// coloring.
struct ExtensionPlan {
  VertexSet base;
  /// Cumulative closure levels: levels[0] = base, each next level adds the
  /// vertices told apart from the new vertex by some member of the previous.
  std::vector<VertexSet> closure_levels;
  VertexSet v_omega;
  VertexSet agreement_set;  // W = V(g) \ v_omega
  Color mu;                 // max of the new vertex's colors over the base
  Color mu_over_closure;    // same maximum over all of v_omega
  std::map<Vertex, Color> closure_colors;  // colors on v_omega
  SelectorTrace trace;                     // run on the agreement set
};

/// Computes the closure, W, mu and a good selector trace on W whose lambdas
/// all exceed mu. Throws InconsistencyError if the min rule is ambiguous and
/// PreconditionError if the strategy cannot produce a good trace.
ExtensionPlan plan_extension(const ColoredGraph& g, const ExtensionType& t,
                             StrategyKind strategy = StrategyKind::greedy_fresh);

/// Materializes plan_extension: closure colors from the min rule, pivots get
/// their lambda, and every other W vertex gets min{f(w, pivot), lambda} from
/// the step at which it drops out.
ColoredGraph extend_with_selector(const ColoredGraph& g, const ExtensionType& t,
                                  StrategyKind strategy = StrategyKind::greedy_fresh);

/// Same as above, also returning the plan used.
ColoredGraph extend_with_selector(const ColoredGraph& g, const ExtensionType& t,
                                  StrategyKind strategy, ExtensionPlan& plan_out);

/// One line per step: `step <alpha> v=<vertex> λ=<color> |A|=<n>`.
std::string format_trace(const SelectorTrace& trace);

}  // namespace dcg
