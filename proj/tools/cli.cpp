#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include "oddcol/algorithms.hpp"
#include "oddcol/error.hpp"
#include "oddcol/generators.hpp"
#include "oddcol/io.hpp"

namespace oddcol::cli {

namespace {

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

// Runs `body`, turning library exceptions into exit codes.
Outcome guarded(const std::function<int(std::ostream&, std::ostream&)>& body) {
  std::ostringstream out, err;
  Outcome r;
  try {
    r.code = body(out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    r.code = kParse;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    r.code = kParse;
  } catch (const PartialColoringError& e) {
    err << "partial coloring: " << e.what() << '\n';
    r.code = kPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    r.code = kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    r.code = kBudget;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << '\n';
    r.code = kInvalid;
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

// One task per input, optionally concurrent; output keeps input order.
int batch(const std::vector<std::string>& inputs, int jobs, std::ostream& out, std::ostream& err,
          const std::function<int(const std::string&, std::ostream&, std::ostream&)>& task) {
  std::vector<Outcome> results(inputs.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t begin = 0; begin < inputs.size(); begin += width) {
    const std::size_t end = std::min(inputs.size(), begin + width);
    std::vector<std::future<Outcome>> running;
    for (std::size_t i = begin; i < end; ++i) {
      auto run_one = [&task, path = inputs[i]] {
        return guarded([&](std::ostream& o, std::ostream& e) { return task(path, o, e); });
      };
      running.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, run_one));
    }
    for (std::size_t i = begin; i < end; ++i) results[i] = running[i - begin].get();
  }
  int code = kOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs.size() > 1) out << "# input: " << inputs[i] << '\n';
    out << results[i].out;
    err << results[i].err;
    code = std::max(code, results[i].code);
  }
  return code;
}

SearchBudget structure_budget(std::uint64_t budget) { return budget ? SearchBudget{budget} : SearchBudget{}; }

int verify_or_fail(const Graph& g, const EdgeColoring& c, std::ostream& err) {
  const VerifyReport report = verify_coloring(g, c);
  if (report) return kOk;
  const Violation& v = *report.violation;
  err << "internal fault: produced coloring fails at (vertex " << v.vertex << ", class " << v.color << ", degree "
      << v.degree << ")\n";
  return kInvalid;
}

int unique_even_vertex(const Graph& g) {
  const auto evens = even_degree_vertices(g);
  if (evens.size() != 1) {
    throw PreconditionError("dominating method needs exactly one even-degree vertex, found " +
                            std::to_string(evens.size()));
  }
  return evens[0];
}

int color_one(const std::string& path, const std::string& method, std::uint64_t budget, std::ostream& out,
              std::ostream& err) {
  const Graph g = read_edge_list(path);
  const SearchBudget sb = structure_budget(budget);
  if (method == "eulerian-remove") {
    const EdgeRemoval r = eulerian_edge_removal(g);
    out << "# method: " << r.coloring.provenance() << '\n';
    out << "# removed edge: " << r.removed.u << ' ' << r.removed.v << '\n';
    write_coloring(out, r.coloring);
    return verify_or_fail(r.reduced, r.coloring, err);
  }
  EdgeColoring c;
  if (method == "auto") {
    c = color_auto(g, sb, budget ? budget : kUnlimitedNodes);
  } else if (method == "tree") {
    c = odd_color_tree(g);
  } else if (method == "even-order") {
    c = odd_color_even_order(g);
  } else if (method == "two-even") {
    c = odd3_two_even(g, sb);
  } else if (method == "dominating") {
    auto found = odd3_dominating_even(g, unique_even_vertex(g));
    if (!found) {
      err << "exception: W_4\n";
      return kPrecondition;
    }
    c = std::move(*found);
  } else if (method == "four-connected") {
    c = odd3_four_connected(g, sb);
  } else {
    throw PreconditionError("unknown method '" + method + "'");
  }
  out << "# method: " << c.provenance() << '\n';
  write_coloring(out, c);
  return verify_or_fail(g, c, err);
}

int chi_one(const std::string& path, int max_k, std::uint64_t budget, std::ostream& out) {
  const Graph g = read_edge_list(path);
  const ExactResult r = exact_odd_chromatic_index(g, max_k, budget ? budget : kUnlimitedNodes);
  if (!r.index) {
    out << "chi_odd > " << max_k << '\n';
    return kOk;
  }
  out << "chi_odd = " << *r.index << '\n';
  write_coloring(out, r.witness);
  return kOk;
}

int verify_files(const std::string& graph_path, const std::string& coloring_path, std::ostream& out) {
  const Graph g = read_edge_list(graph_path);
  const EdgeColoring c = read_coloring(coloring_path);
  const VerifyReport report = verify_coloring(g, c);
  if (report) {
    out << "valid: " << c.class_count() << " classes\n";
    return kOk;
  }
  const Violation& v = *report.violation;
  out << "violation: (vertex " << v.vertex << ", class " << v.color << ", degree " << v.degree << ")\n";
  return kInvalid;
}

int to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw PreconditionError(std::string("expected an integer ") + what + ", got '" + s + "'");
  return value;
}

Graph named_cubic(const std::string& name) {
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "cube") return hypercube(3);
  if (name == "heawood") return heawood_graph();
  throw PreconditionError("unknown cubic base '" + name + "' (use k33, cube or heawood)");
}

Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw PreconditionError("gen " + family + " takes " + std::to_string(lo) +
                              (hi != lo ? " to " + std::to_string(hi) : std::string()) + " parameter(s)");
    }
  };
  if (family == "wheel") {
    need(1, 1);
    return wheel(to_int(params[0], "rim size"));
  }
  if (family == "hanrei") {
    need(1, 1);
    const Graph base = named_cubic(params[0]);
    const auto pair = first_hanrei_pair(base);
    if (!pair) throw PreconditionError("no edge pair of '" + params[0] + "' satisfies the premises");
    return hanrei_graph(base, pair->first, pair->second);
  }
  if (family == "obstruction") {
    need(0, 0);
    const Graph h = complete_minus_matching(6, 3);
    return obstruction_graph(h, h.edges()[0]);
  }
  if (family == "random") {
    need(1, 1);
    const auto profile = parse_profile(params[0]);
    if (!profile) throw PreconditionError("unknown profile '" + params[0] + "'");
    return random_fixture(*profile, seed);
  }
  if (family == "complete") {
    need(1, 1);
    return complete_graph(to_int(params[0], "order"));
  }
  if (family == "cycle") {
    need(1, 1);
    return cycle_graph(to_int(params[0], "order"));
  }
  if (family == "circulant") {
    need(2, 64);
    std::vector<int> jumps;
    for (std::size_t i = 1; i < params.size(); ++i) jumps.push_back(to_int(params[i], "jump"));
    return circulant(to_int(params[0], "order"), jumps);
  }
  throw PreconditionError("unknown family '" + family + "'");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd edge-colorings of simple graphs", "oddcol"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string method = "auto";
  int max_k = 4;
  int jobs = 1;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  std::string graph_path, coloring_path, family;
  std::vector<std::string> params;

  auto* chi = app.add_subcommand("chi", "exact odd chromatic index with a witness");
  chi->add_option("inputs", inputs, "edge-list files")->required();
  chi->add_option("--max-k", max_k, "largest number of colors tried")->check(CLI::PositiveNumber);
  chi->add_option("--budget", budget, "search node budget (0: unlimited)");
  chi->add_option("--jobs", jobs, "inputs processed concurrently")->check(CLI::PositiveNumber);

  auto* color = app.add_subcommand("color", "constructive odd coloring");
  color->add_option("inputs", inputs, "edge-list files")->required();
  color->add_option("--method", method, "construction to run")
      ->check(CLI::IsMember({"auto", "tree", "even-order", "two-even", "dominating", "four-connected",
                             "eulerian-remove"}));
  color->add_option("--budget", budget, "search node budget (0: default)");
  color->add_option("--jobs", jobs, "inputs processed concurrently")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
  verify->add_option("graph", graph_path, "edge-list file")->required();
  verify->add_option("coloring", coloring_path, "coloring file")->required();

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("family", family, "wheel, hanrei, obstruction, random, complete, cycle or circulant")->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", seed, "seed for the random family");

  auto* dot = app.add_subcommand("dot", "export DOT text");
  dot->add_option("graph", graph_path, "edge-list file")->required();
  dot->add_option("coloring", coloring_path, "optional coloring file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kPrecondition;
  }

  if (chi->parsed()) {
    return batch(inputs, jobs, out, err,
                 [&](const std::string& path, std::ostream& o, std::ostream&) { return chi_one(path, max_k, budget, o); });
  }
  if (color->parsed()) {
    return batch(inputs, jobs, out, err, [&](const std::string& path, std::ostream& o, std::ostream& e) {
      return color_one(path, method, budget, o, e);
    });
  }
  Outcome r;
  if (verify->parsed()) {
    r = guarded([&](std::ostream& o, std::ostream&) { return verify_files(graph_path, coloring_path, o); });
  } else if (gen->parsed()) {
    r = guarded([&](std::ostream& o, std::ostream&) {
      write_edge_list(o, generate(family, params, seed));
      return kOk;
    });
  } else {
    r = guarded([&](std::ostream& o, std::ostream&) {
      const Graph g = read_edge_list(graph_path);
      if (coloring_path.empty()) {
        write_dot(o, g);
      } else {
        const EdgeColoring c = read_coloring(coloring_path);
        write_dot(o, g, &c);
      }
      return kOk;
    });
  }
  out << r.out;
  err << r.err;
  return r.code;
}

}  // namespace oddcol::cli
