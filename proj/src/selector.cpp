#include "dcg/selector.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "dcg/core.hpp"
#include "dcg/errors.hpp"

namespace dcg {

VertexSet selector_step(const ColoredGraph& g, const VertexSet& current, const Vertex& pivot,
                        const Color& lambda) {
  if (!std::binary_search(current.begin(), current.end(), pivot)) {
    throw PreconditionError("selector pivot '" + pivot + "' is not in the current set");
  }
  VertexSet next;
  for (const auto& u : current) {
    if (!g.contains(u)) throw PreconditionError("selector set names unknown vertex '" + u + "'");
    if (u != pivot && g.color(u, pivot) == lambda) next.push_back(u);
  }
  return next;
}

std::optional<std::size_t> SelectorTrace::leaving_step(const Vertex& v) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& here = steps[i].set;
    const auto& after = i + 1 < steps.size() ? steps[i + 1].set : final_set;
    if (std::binary_search(here.begin(), here.end(), v) &&
        !std::binary_search(after.begin(), after.end(), v)) {
      return i;
    }
  }
  return std::nullopt;
}

SelectorTrace run_selector(const ColoredGraph& g, const VertexSet& start,
                           const SelectorStrategy& strategy) {
  if (start.empty()) throw PreconditionError("selector start set is empty");
  if (make_vertex_set(start) != start) throw PreconditionError("selector start set must be sorted");
  for (const auto& v : start) {
    if (!g.contains(v)) throw PreconditionError("selector start vertex '" + v + "' not in graph");
  }

  SelectorTrace trace;
  trace.start = start;
  VertexSet current = start;
  std::optional<Color> last;
  while (!current.empty()) {
    auto choice = strategy(g, current, last);
    if (!choice) break;
    if (last && !(*last < choice->lambda)) {
      throw PreconditionError("selector lambda " + choice->lambda.to_string() +
                              " does not exceed previous " + last->to_string());
    }
    VertexSet next = selector_step(g, current, choice->pivot, choice->lambda);
    trace.steps.push_back({std::move(current), std::move(choice->pivot), choice->lambda});
    last = choice->lambda;
    current = std::move(next);
  }
  trace.final_set = std::move(current);
  trace.classification = trace.final_set.empty() ? SelectorClass::good : SelectorClass::bad;
  return trace;
}

std::string to_string(StrategyKind kind) {
  return kind == StrategyKind::greedy_fresh ? "greedy" : "stress";
}

StrategyKind parse_strategy_kind(const std::string& name) {
  if (name == "greedy" || name == "greedy-fresh") return StrategyKind::greedy_fresh;
  if (name == "stress") return StrategyKind::stress;
  throw ParseError("unknown selector strategy '" + name + "'");
}

SelectorStrategy make_strategy(StrategyKind kind, const Color& floor, const Color& fresh) {
  auto next_fresh = [fresh](const std::optional<Color>& last) {
    if (!last || *last < fresh) return fresh;
    return Color(Color::Rational(last->value() + 1));
  };
  if (kind == StrategyKind::greedy_fresh) {
    return [next_fresh](const ColoredGraph&, const VertexSet& current,
                        const std::optional<Color>& last) -> std::optional<SelectorChoice> {
      return SelectorChoice{current.front(), next_fresh(last)};
    };
  }
  return [floor, next_fresh](const ColoredGraph& g, const VertexSet& current,
                             const std::optional<Color>& last) -> std::optional<SelectorChoice> {
    const Vertex& pivot = current.front();
    const Color bound = last && floor < *last ? *last : floor;
    for (const auto& lambda : palette(g)) {
      if (!(bound < lambda)) continue;
      if (!selector_step(g, current, pivot, lambda).empty()) return SelectorChoice{pivot, lambda};
    }
    return SelectorChoice{pivot, next_fresh(last)};
  };
}

namespace {

const Color& max_color(const std::map<Vertex, Color>& colors, const VertexSet& over) {
  const Color* best = &colors.at(over.front());
  for (const auto& v : over) best = std::max(best, &colors.at(v), [](auto* a, auto* b) { return *a < *b; });
  return *best;
}

}  // namespace

ExtensionPlan plan_extension(const ColoredGraph& g, const ExtensionType& t, StrategyKind strategy) {
  require_valid(g, "extension input");
  check_extension_type(g, t);

  ExtensionPlan plan;
  plan.base = t.base;
  plan.closure_colors = t.colors;
  plan.closure_levels.push_back(t.base);

  // Grow the closure until a level adds nothing. Every vertex reached is
  // colored by the min rule; all witnesses must agree, including witnesses
  // for vertices that already carry a color.
  while (true) {
    const VertexSet& level = plan.closure_levels.back();
    VertexSet next = level;
    for (const auto& v : g.vertices()) {
      std::optional<Color> value;
      for (const auto& a : level) {
        if (a == v) continue;
        const Color& ab = plan.closure_colors.at(a);
        const Color& av = g.color(a, v);
        if (ab == av) continue;
        const Color& m = std::min(ab, av);
        if (value && *value != m) {
          throw InconsistencyError("ambiguous min rule at '" + v + "': " + value->to_string() +
                                   " vs " + m.to_string());
        }
        value = m;
      }
      if (!value) continue;
      const auto [it, inserted] = plan.closure_colors.emplace(v, *value);
      if (!inserted && it->second != *value) {
        throw InconsistencyError("min rule recolors '" + v + "' from " + it->second.to_string() +
                                 " to " + value->to_string());
      }
      if (inserted) next.insert(std::upper_bound(next.begin(), next.end(), v), v);
    }
    if (next.size() == level.size()) break;
    plan.closure_levels.push_back(std::move(next));
  }
  plan.v_omega = plan.closure_levels.back();
  std::set_difference(g.vertices().begin(), g.vertices().end(), plan.v_omega.begin(),
                      plan.v_omega.end(), std::back_inserter(plan.agreement_set));
  for (const auto& w : plan.agreement_set) {
    for (const auto& a : plan.v_omega) {
      if (g.color(a, w) != plan.closure_colors.at(a)) {
        throw InconsistencyError("agreement set vertex '" + w + "' is told apart by '" + a + "'");
      }
    }
  }

  plan.mu = max_color(t.colors, t.base);
  plan.mu_over_closure = max_color(plan.closure_colors, plan.v_omega);
  // If the two maxima ever differ, the larger one bounds the selector.
  const Color floor = std::max(plan.mu, plan.mu_over_closure);

  if (plan.agreement_set.empty()) return plan;

  std::vector<Color> used = palette(g);
  for (const auto& [_, c] : plan.closure_colors) used.push_back(c);
  used.push_back(floor);
  plan.trace = run_selector(g, plan.agreement_set, make_strategy(strategy, floor, fresh_above(used)));
  if (plan.trace.classification != SelectorClass::good) {
    throw PreconditionError("selector strategy '" + to_string(strategy) +
                            "' did not produce a good trace");
  }
  for (const auto& step : plan.trace.steps) {
    if (!(floor < step.lambda)) {
      throw PreconditionError("selector lambda " + step.lambda.to_string() + " does not exceed mu");
    }
  }
  return plan;
}

ColoredGraph extend_with_selector(const ColoredGraph& g, const ExtensionType& t,
                                  StrategyKind strategy, ExtensionPlan& plan_out) {
  plan_out = plan_extension(g, t, strategy);
  std::map<Vertex, Color> colors = plan_out.closure_colors;
  const auto& steps = plan_out.trace.steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    const VertexSet& after = i + 1 < steps.size() ? steps[i + 1].set : plan_out.trace.final_set;
    for (const auto& w : step.set) {
      if (std::binary_search(after.begin(), after.end(), w)) continue;
      colors.emplace(w, w == step.pivot ? step.lambda : std::min(g.color(w, step.pivot), step.lambda));
    }
  }
  ColoredGraph out = g.with_vertex(t.new_vertex, colors);
  const auto report = validate(out);
  if (!report.valid()) {
    const auto& v = report.violations.front();
    throw InconsistencyError("selector extension broke the triangle law at (" + v.a + ", " + v.b +
                             ", " + v.c + ")");
  }
  return out;
}

ColoredGraph extend_with_selector(const ColoredGraph& g, const ExtensionType& t,
                                  StrategyKind strategy) {
  ExtensionPlan plan;
  return extend_with_selector(g, t, strategy, plan);
}

std::string format_trace(const SelectorTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "step " << i << " v=" << s.pivot << " λ=" << s.lambda.to_string() << " |A|=" << s.set.size()
        << '\n';
  }
  return out.str();
}

}  // namespace dcg
