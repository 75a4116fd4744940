// Copyright 2026 The cagegen Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: generate, bounds, lift-search, cover, lift, reduce,
// filter and fixture.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cagegen/bounds.hpp"
#include "cagegen/canon.hpp"
#include "cagegen/constructions.hpp"
#include "cagegen/covers.hpp"
#include "cagegen/filter.hpp"
#include "cagegen/fixtures.hpp"
#include "cagegen/generator.hpp"
#include "cagegen/graph6.hpp"
#include "cagegen/groups.hpp"

namespace {

using namespace cagegen;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<Graph> read_graphs(const std::string& path) {
  if (path == "-") return read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file " + path);
  return read_graph6_stream(in);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// "cyclic:M", "dihedral:M" or a Cayley table file.
Group parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const int m = std::stoi(spec.substr(colon + 1));
    if (kind == "cyclic") return make_cyclic_group(m);
    if (kind == "dihedral") return make_dihedral_group(m);
  }
  return load_cayley_table(spec);
}

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

struct GenerateArgs {
  int n = 0, k = 3, g = 3, workers = 1, split_depth = 0;
  bool no_dedup = false, ignore_bound = false;
  std::size_t dedup_cap = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  GeneratorOptions options;
  options.workers = a.workers;
  options.dedup = !a.no_dedup;
  options.dedup_capacity = a.dedup_cap > 0 ? a.dedup_cap : dedup_capacity_from_env();
  options.enforce_lower_bound = !a.ignore_bound;
  options.split_depth = a.split_depth;
  Output out(a.out);
  const auto start = std::chrono::steady_clock::now();
  const GenerationResult r = generate_all(a.n, a.k, a.g, options);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  for (const Graph& graph : r.graphs) write_graph6(out.stream(), graph);
  std::cerr << "generated " << r.graphs.size() << " graph(s) for n=" << a.n << " k=" << a.k
            << " g=" << a.g << " in " << std::fixed << std::setprecision(2) << seconds_since(start)
            << "s (nodes=" << r.stats.nodes << ", dedup-pruned=" << r.stats.dedup_pruned
            << ", forms=" << r.stats.forms_stored << ", tasks=" << r.stats.tasks << ")\n";
  return 0;
}

int cmd_bounds(int k, int g) {
  const BoundsReport r = refined_lower_bound(k, g);
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"k", std::to_string(r.k)},
      {"g", std::to_string(r.g)},
      {"moore", std::to_string(r.moore)},
      {"prop1", show(r.prop1)},
      {"prop2_divisible", r.prop2_divisible ? (*r.prop2_divisible ? "true" : "false") : "-"},
      {"cover_bound", show(r.cover_bound)},
      {"final", std::to_string(r.parity_adjusted_final)},
  };
  for (const auto& [key, value] : rows) {
    std::cout << std::left << std::setw(18) << key << std::right << std::setw(12) << value << '\n';
  }
  for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
  std::cout << '\n';
  for (const auto& [key, value] : rows) std::cout << key << '=' << value << '\n';
  return 0;
}

int cmd_lift_search(int g, const std::string& groups_spec, int cap, int workers, const std::string& out_path) {
  const auto groups = groups_from_source(groups_spec);
  const auto start = std::chrono::steady_clock::now();
  const LiftSearchResult r = search_k13loop_lifts(g, groups, cap, workers);
  std::cerr << "searched " << r.groups_searched << " group(s), " << r.triples_checked << " triple(s) in "
            << std::fixed << std::setprecision(2) << seconds_since(start) << "s\n";
  if (!r.order) {
    std::cout << "order=none\n";
    return 0;
  }
  std::cout << "order=" << *r.order << '\n';
  for (const auto& w : r.witnesses) {
    std::cout << "witness group=" << w.group_name << " loops=" << w.loops[0] << ',' << w.loops[1] << ','
              << w.loops[2] << '\n';
  }
  if (!out_path.empty()) {
    Output out(out_path);
    const auto& w = r.witnesses.front();
    write_graph6(out.stream(), voltage_lift(k13_loop_assignment(groups[w.group_index], w.loops)));
  }
  return 0;
}

int cmd_cover(const std::string& in, const std::string& out_path) {
  Output out(out_path);
  for (const Graph& graph : read_graphs(in)) write_graph6(out.stream(), canonical_double_cover(graph));
  return 0;
}

int cmd_lift(const std::string& group_spec, const std::vector<int>& loops, const std::string& out_path) {
  if (loops.size() != 3) throw CLI::ValidationError("--loops", "needs exactly three voltages");
  const Group group = parse_group(group_spec);
  Output out(out_path);
  write_graph6(out.stream(), voltage_lift(k13_loop_assignment(group, {loops[0], loops[1], loops[2]})));
  return 0;
}

int cmd_reduce(const std::string& in, int k, bool all, int workers, const std::string& out_path) {
  Output out(out_path);
  for (const Graph& graph : read_graphs(in)) {
    const auto h = girth(graph);
    if (!h) throw std::invalid_argument("input graph is acyclic");
    if (!all) {
      write_graph6(out.stream(), reduce_by_cycle(graph, k, *h));
      continue;
    }
    std::size_t invalid = 0;
    const auto outcomes = reduce_all_choices(graph, k, *h, workers);
    for (const auto& o : outcomes) {
      if (!o.valid) ++invalid;
      write_graph6(out.stream(), o.result);
    }
    std::cerr << outcomes.size() << " excision(s), " << invalid << " invalid\n";
    if (invalid > 0) return kExitRuntime;
  }
  return 0;
}

int cmd_filter(const std::string& in_path, const FilterOptions& options, const std::string& out_path) {
  Output out(out_path);
  FilterReport report;
  if (in_path == "-") {
    report = run_filter(std::cin, out.stream(), std::cerr, options);
  } else {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open input file " + in_path);
    report = run_filter(in, out.stream(), std::cerr, options);
  }
  std::cerr << report.passed << " of " << report.read << " graph(s) passed";
  if (report.malformed > 0) std::cerr << ", " << report.malformed << " malformed line(s) skipped";
  std::cerr << '\n';
  return report.malformed > 0 ? kExitRuntime : 0;
}

int cmd_fixture(const std::string& name, bool list, const std::string& out_path) {
  if (list || name.empty()) {
    for (const auto& f : fixtures::catalog()) {
      std::cout << std::left << std::setw(16) << f.name << f.description << '\n';
    }
    return 0;
  }
  Output out(out_path);
  write_graph6(out.stream(), fixtures::find(name).build());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator and toolkit for k-regular graphs of girth g without (g+1)-cycles"};
  app.require_subcommand(1);
  int result = 0;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "All (k,g,g+1)-graphs on n vertices, one graph6 line each");
  generate->add_option("-n", gen.n, "Order")->required()->check(CLI::Range(0, kMaxOrder));
  generate->add_option("-k", gen.k, "Degree")->required()->check(CLI::Range(3, 64));
  generate->add_option("-g", gen.g, "Girth")->required()->check(CLI::Range(3, 64));
  generate->add_option("--workers", gen.workers, "OpenMP worker threads")->check(CLI::Range(1, 1024));
  generate->add_flag("--no-dedup", gen.no_dedup, "Disable isomorphism pruning of partial graphs");
  generate->add_flag("--ignore-bound", gen.ignore_bound, "Search even below the refined lower bound");
  generate->add_option("--split-depth", gen.split_depth, "Serial decisions before parallel tasks (0 = auto)")
      ->check(CLI::Range(0, 40));
  generate->add_option("--dedup-cap", gen.dedup_cap, "Maximum stored canonical forms (default: env or 2^26)");
  generate->add_option("--out", gen.out, "Output file (default stdout)");
  generate->callback([&] { result = cmd_generate(gen); });

  int bk = 3, bg = 3;
  auto* bounds = app.add_subcommand("bounds", "Lower bounds for (k,g)");
  bounds->add_option("-k", bk, "Degree")->required()->check(CLI::Range(3, 1000));
  bounds->add_option("-g", bg, "Girth")->required()->check(CLI::Range(3, 200));
  bounds->callback([&] { result = cmd_bounds(bk, bg); });

  int lg = 3, lcap = 0, lworkers = 1;
  std::string lgroups, lout;
  auto* lift_search = app.add_subcommand("lift-search", "Smallest (3,g,g+1)-lift of K_{1,3} with loops");
  lift_search->add_option("-g", lg, "Girth")->required()->check(CLI::Range(3, 64));
  lift_search->add_option("--groups", lgroups, "cyclic:MAX, dihedral:MAX, abelian:MAX, builtin:MAX or DIR")
      ->required();
  lift_search->add_option("--cap", lcap, "Largest lift order to consider (0 = none)")->check(CLI::NonNegativeNumber);
  lift_search->add_option("--workers", lworkers, "OpenMP worker threads")->check(CLI::Range(1, 1024));
  lift_search->add_option("--out", lout, "Write the first witness lift as graph6");
  lift_search->callback([&] { result = cmd_lift_search(lg, lgroups, lcap, lworkers, lout); });

  std::string cin_path = "-", cout_path;
  auto* cover = app.add_subcommand("cover", "Canonical double cover of every input graph");
  cover->add_option("--in", cin_path, "graph6 input (- for stdin)");
  cover->add_option("--out", cout_path, "Output file (default stdout)");
  cover->callback([&] { result = cmd_cover(cin_path, cout_path); });

  std::string group_spec, lift_out;
  std::vector<int> loops;
  auto* lift = app.add_subcommand("lift", "Lift of K_{1,3} with loops for one voltage triple");
  lift->add_option("--group", group_spec, "cyclic:M, dihedral:M or a Cayley table file")->required();
  lift->add_option("--loops", loops, "Loop voltages a,b,c")->required()->delimiter(',')->expected(3);
  lift->add_option("--out", lift_out, "Output file (default stdout)");
  lift->callback([&] { result = cmd_lift(group_spec, loops, lift_out); });

  std::string rin = "-", rout;
  int rk = 3, rworkers = 1;
  bool rall = false;
  auto* reduce = app.add_subcommand("reduce", "Excise two vertices: girth h to girth h-2, two fewer vertices");
  reduce->add_option("--in", rin, "graph6 input (- for stdin)");
  reduce->add_option("-k", rk, "Degree")->required()->check(CLI::Range(3, 64));
  reduce->add_flag("--all", rall, "Every girth cycle, edge and pairing");
  reduce->add_option("--workers", rworkers, "OpenMP worker threads")->check(CLI::Range(1, 1024));
  reduce->add_option("--out", rout, "Output file (default stdout)");
  reduce->callback([&] { result = cmd_reduce(rin, rk, rall, rworkers, rout); });

  std::string fin = "-", fout;
  FilterOptions fopt;
  int fodd = 0;
  auto* filter = app.add_subcommand("filter", "Keep input graphs that are (k,g,g+1)-graphs");
  filter->add_option("--in", fin, "graph6 input (- for stdin)");
  filter->add_option("-k", fopt.k, "Degree")->required()->check(CLI::Range(1, 64));
  filter->add_option("-g", fopt.g, "Girth")->required()->check(CLI::Range(3, 64));
  filter->add_option("--odd-girth", fodd, "Also require this odd girth")->check(CLI::Range(3, 100000));
  filter->add_flag("-v,--verbose", fopt.verbose, "Report a verdict per graph");
  filter->add_option("--out", fout, "Output file (default stdout)");
  filter->callback([&] {
    if (fodd > 0) fopt.odd_girth = fodd;
    result = cmd_filter(fin, fopt, fout);
  });

  std::string fixture_name, fixture_out;
  bool fixture_list = false;
  auto* fixture = app.add_subcommand("fixture", "Print a built-in graph as graph6");
  fixture->add_option("name", fixture_name, "Fixture name");
  fixture->add_flag("--list", fixture_list, "List fixture names");
  fixture->add_option("--out", fixture_out, "Output file (default stdout)");
  fixture->callback([&] { result = cmd_fixture(fixture_name, fixture_list, fixture_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return result;
}
