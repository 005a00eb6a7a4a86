#include "dcg/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "dcg/amalgam.hpp"
#include "dcg/core.hpp"
#include "dcg/dcg_format.hpp"
#include "dcg/errors.hpp"
#include "dcg/generic.hpp"
#include "dcg/oracle.hpp"
#include "dcg/realize.hpp"
#include "dcg/selector.hpp"
#include "text_util.hpp"

namespace dcg::cli {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

ColoredGraph load_graph(const std::string& path, std::istream& in) { return parse_dcg(read_input(path, in)); }

VertexSet parse_vertex_list(const std::string& text) {
  if (text.empty()) return {};
  std::vector<Vertex> out = detail::split(text, ',');
  for (const auto& v : out) check_vertex_name(v);
  return make_vertex_set(std::move(out));
}

std::vector<Color> parse_palette(const std::string& text) {
  std::vector<Color> out;
  for (const auto& item : detail::split(text, ',')) out.push_back(Color::parse(item));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<Vertex, Color> parse_color_map(const std::string& text) {
  std::map<Vertex, Color> out;
  for (const auto& item : detail::split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected vertex=color in '" + item + "'");
    const Vertex v = item.substr(0, eq);
    check_vertex_name(v);
    if (!out.emplace(v, Color::parse(item.substr(eq + 1))).second) {
      throw ParseError("vertex '" + v + "' colored twice");
    }
  }
  return out;
}

TypeSpace parse_type_space(const std::string& name) {
  if (name == "palette") return TypeSpace::palette_only;
  if (name == "order") return TypeSpace::order_types;
  throw ParseError("unknown type space '" + name + "' (expected palette or order)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Distinction-colored complete graphs: validate, amalgamate, realize, extend, saturate."};
  app.name("dcg");
  app.require_subcommand(1, 1);

  std::string input, second, out_path, base_text, colors_text, new_vertex, strategy_name = "greedy";
  std::string palette_text, types_name = "palette";
  bool trace = false, list = false;
  std::size_t k = 1, n = 0, m = 0;
  std::optional<std::size_t> max_rounds;
  std::uint64_t seed = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check the triangle law; exit 1 if violated");
  validate_cmd->add_option("graph", input, "dcg-v1 file ('-' for stdin)")->required();

  auto* amalgamate_cmd = app.add_subcommand("amalgamate", "Amalgamate two graphs over their shared vertices");
  amalgamate_cmd->add_option("B", input, "dcg-v1 file")->required();
  amalgamate_cmd->add_option("C", second, "dcg-v1 file")->required();
  amalgamate_cmd->add_option("--base", base_text, "shared vertices, comma separated")->required();
  amalgamate_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* jep_cmd = app.add_subcommand("jep", "Jointly embed two graphs with disjoint vertices");
  jep_cmd->add_option("B", input, "dcg-v1 file")->required();
  jep_cmd->add_option("C", second, "dcg-v1 file")->required();
  jep_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* realize_cmd = app.add_subcommand("realize", "Emit a cert-v1 bit-string realization");
  realize_cmd->add_option("graph", input, "dcg-v1 file ('-' for stdin)")->required();
  realize_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* derive_cmd = app.add_subcommand("derive", "First-difference coloring of a cert-v1 file");
  derive_cmd->add_option("cert", input, "cert-v1 file ('-' for stdin)")->required();
  derive_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* extend_cmd = app.add_subcommand("extend", "Add one vertex realizing a type, via a selector");
  extend_cmd->add_option("graph", input, "dcg-v1 file ('-' for stdin)")->required();
  extend_cmd->add_option("--base", base_text, "base vertices (default: keys of --colors)");
  extend_cmd->add_option("--colors", colors_text, "vertex=color,... over the base")->required();
  extend_cmd->add_option("--new", new_vertex, "name of the new vertex")->required();
  extend_cmd->add_flag("--trace", trace, "print the selector trace on stderr");
  extend_cmd->add_option("--strategy", strategy_name, "greedy or stress");
  extend_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* build_cmd = app.add_subcommand("build-generic", "Saturate a graph for a fixed palette");
  build_cmd->add_option("--palette", palette_text, "colors, comma separated")->required();
  build_cmd->add_option("--k", k, "largest base size to saturate")->required();
  build_cmd->add_option("--max-rounds", max_rounds, "round budget (default: unbounded)");
  build_cmd->add_option("--seed", seed, "vertex naming seed (0: sequential names)");
  build_cmd->add_option("--strategy", strategy_name, "greedy or stress");
  build_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check-generic", "Check properties (I) and (II) up to base size k");
  check_cmd->add_option("graph", input, "dcg-v1 file ('-' for stdin)")->required();
  check_cmd->add_option("--k", k, "largest base size to check")->required();
  check_cmd->add_option("--palette", palette_text, "default: the graph's own palette");
  check_cmd->add_option("--types", types_name, "palette or order");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count valid colorings of K_n over {1..m}");
  enumerate_cmd->add_option("--n", n, "vertex count, 1..6")->required();
  enumerate_cmd->add_option("--m", m, "palette size, 1..6")->required();
  enumerate_cmd->add_flag("--list", list, "also print every graph");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  argv_store.insert(argv_store.begin(), "dcg");
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, io.out, io.err);
    app.exit(e, io.err, io.err);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto report = validate(load_graph(input, io.in));
      std::ostringstream text;
      text << "violations: " << report.violations.size() << '\n';
      for (const auto& v : report.violations) {
        text << "triangle " << v.a << ' ' << v.b << ' ' << v.c << ' ' << v.ab.to_string() << ' '
             << v.ac.to_string() << ' ' << v.bc.to_string() << '\n';
      }
      io.out << text.str();
      return report.valid() ? 0 : 1;
    }
    if (amalgamate_cmd->parsed()) {
      const auto b = load_graph(input, io.in);
      const auto c = load_graph(second, io.in);
      write_output(out_path, print_dcg(amalgamate(b, c, parse_vertex_list(base_text))), io.out);
      return 0;
    }
    if (jep_cmd->parsed()) {
      const auto b = load_graph(input, io.in);
      const auto c = load_graph(second, io.in);
      write_output(out_path, print_dcg(jep(b, c)), io.out);
      return 0;
    }
    if (realize_cmd->parsed()) {
      write_output(out_path, print_certificate(realize(load_graph(input, io.in))), io.out);
      return 0;
    }
    if (derive_cmd->parsed()) {
      write_output(out_path, print_dcg(derive_coloring(parse_certificate(read_input(input, io.in)))), io.out);
      return 0;
    }
    if (extend_cmd->parsed()) {
      const auto g = load_graph(input, io.in);
      ExtensionType t;
      t.colors = parse_color_map(colors_text);
      t.new_vertex = new_vertex;
      check_vertex_name(new_vertex);
      for (const auto& [v, _] : t.colors) t.base.push_back(v);
      if (!base_text.empty() && parse_vertex_list(base_text) != t.base) {
        throw ParseError("--base and the keys of --colors differ");
      }
      ExtensionPlan plan;
      const auto result = extend_with_selector(g, t, parse_strategy_kind(strategy_name), plan);
      if (trace) io.err << format_trace(plan.trace);
      write_output(out_path, print_dcg(result), io.out);
      return 0;
    }
    if (build_cmd->parsed()) {
      BuildOptions options;
      options.max_rounds = max_rounds;
      options.naming_seed = seed;
      options.strategy = parse_strategy_kind(strategy_name);
      const auto pal = parse_palette(palette_text);
      try {
        const auto g = build_generic(pal, k, options);
        const auto report = check_property_II(g, k, pal, TypeSpace::palette_only);
        write_output(out_path, print_dcg(g), io.out);
        (out_path.empty() ? io.err : io.out) << format_report(report);
        return 0;
      } catch (const BudgetExhausted& e) {
        io.err << e.what() << '\n'
               << format_report(check_property_II(e.partial(), k, pal, TypeSpace::palette_only));
        return 1;
      }
    }
    if (check_cmd->parsed()) {
      const auto g = load_graph(input, io.in);
      const auto pal = palette_text.empty() ? palette(g) : parse_palette(palette_text);
      const bool property_I = check_property_I(g);
      io.out << "property I: " << (property_I ? "yes" : "no") << '\n';
      if (!property_I) return 1;
      const auto report = check_property_II(g, k, pal, parse_type_space(types_name));
      io.out << format_report(report);
      return report.passed ? 0 : 1;
    }
    if (enumerate_cmd->parsed()) {
      const auto result = oracle::enumerate_valid(n, m, list);
      std::ostringstream text;
      text << "count: " << result.count << '\n';
      for (const auto& g : result.graphs) text << '\n' << print_dcg(g);
      io.out << text.str();
      return 0;
    }
  } catch (const InconsistencyError& e) {
    io.err << "internal inconsistency: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dcg::cli
