#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "oddcol/error.hpp"
#include "oddcol/generators.hpp"
#include "oddcol/io.hpp"

using namespace oddcol;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("oddcol-test-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string graph(const std::string& name, const Graph& g) const {
    std::ostringstream s;
    write_edge_list(s, g);
    return file(name, s.str());
  }

 private:
  fs::path dir_;
};

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("edge-list parsing") {
  const Graph g = parse("# triangle\n0 1\n\n1 2\n  2 0  \n");
  CHECK(g == complete_graph(3));
  CHECK(parse("n 5\n0 1\n").vertex_count() == 5);

  const auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 1\n1 1\n") == 2);
  CHECK(line_of("0 1\n1 0\n") == 2);
  CHECK(line_of("0 1\nx 2\n") == 2);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("n 3\n0 3\n") == 2);
  CHECK(line_of("0 1\nn 3\n") == 2);
  CHECK(line_of("n 3\nn 3\n") == 2);
  CHECK(line_of("-1 2\n") == 1);
}

TEST_CASE("edge-list and coloring round trips") {
  Rng rng(4);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_fixture(FixtureProfile::ConnectedEvenOrder, rng.below(1000) + 1);
    std::ostringstream s;
    write_edge_list(s, g);
    CHECK(parse(s.str()) == g);
  }
  const EdgeColoring c({{Edge{0, 1}, 2}, {Edge{1, 2}, 1}}, "tree");
  std::ostringstream s;
  s << "# method: tree\n";
  write_coloring(s, c);
  std::istringstream in(s.str());
  const EdgeColoring back = parse_coloring(in);
  CHECK(back == c);
  CHECK(back.provenance() == "tree");
  std::istringstream bad("0 1 0\n");
  CHECK_THROWS_AS(parse_coloring(bad), ParseError);
}

TEST_CASE("dot export") {
  std::ostringstream plain;
  write_dot(plain, complete_graph(3));
  CHECK(count(plain.str(), " -- ") == 3);
  CHECK(count(plain.str(), "color=") == 0);

  const Graph c4 = cycle_graph(4);
  const EdgeColoring alt({{Edge{0, 1}, 1}, {Edge{1, 2}, 2}, {Edge{2, 3}, 1}, {Edge{0, 3}, 2}});
  std::ostringstream colored;
  write_dot(colored, c4, &alt);
  CHECK(count(colored.str(), "color=red") == 2);
  CHECK(count(colored.str(), "color=blue") == 2);
  CHECK(colored.str().rfind("graph G {\n", 0) == 0);
  CHECK(std::string(dot_color(7)) == "gray");

  const EdgeColoring partial({{Edge{0, 1}, 1}});
  std::ostringstream sink;
  CHECK_THROWS_AS(write_dot(sink, c4, &partial), PartialColoringError);
}

TEST_CASE("cli chi") {
  const Scratch tmp;
  const Run w4 = run({"chi", tmp.graph("w4.txt", wheel(4))});
  CHECK(w4.code == 0);
  CHECK(w4.out.rfind("chi_odd = 4\n", 0) == 0);
  CHECK(run({"chi", tmp.graph("k2.txt", complete_graph(2))}).out.rfind("chi_odd = 1\n", 0) == 0);
  CHECK(run({"chi", tmp.graph("c3.txt", complete_graph(3))}).out.rfind("chi_odd = 3\n", 0) == 0);
  CHECK(run({"chi", "--max-k", "2", tmp.file("c3b.txt", "0 1\n1 2\n0 2\n")}).out == "chi_odd > 2\n");
  const Run batch = run({"chi", "--jobs", "2", tmp.file("a.txt", "0 1\n"), tmp.file("b.txt", "0 1\n1 2\n")});
  CHECK(batch.code == 0);
  CHECK(count(batch.out, "# input: ") == 2);
  CHECK(batch.out.find("a.txt\nchi_odd = 1\n") != std::string::npos);
  CHECK(batch.out.find("b.txt\nchi_odd = 2\n") != std::string::npos);
}

TEST_CASE("cli errors map to exit codes") {
  const Scratch tmp;
  const Run parse_fail = run({"chi", tmp.file("bad.txt", "0 1\n2 2\n")});
  CHECK(parse_fail.code == 3);
  CHECK(parse_fail.err.find("line 2") != std::string::npos);
  CHECK(run({"chi", "/nonexistent/graph.txt"}).code == 3);
  CHECK(run({"chi", "--budget", "5", tmp.graph("k9.txt", complete_graph(9))}).code == 4);
  CHECK(run({"color", "--method", "tree", tmp.graph("c5.txt", cycle_graph(5))}).code == 2);
  CHECK(run({"color", "--method", "bogus", tmp.graph("c5b.txt", cycle_graph(5))}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "wheel", "two"}).code == 2);
}

TEST_CASE("cli color") {
  const Scratch tmp;
  const Run k5 = run({"color", "--method", "four-connected", tmp.graph("k5.txt", complete_graph(5))});
  CHECK(k5.code == 0);
  CHECK(k5.out.rfind("# method: four-connected: two-even\n", 0) == 0);
  std::istringstream in(k5.out);
  CHECK(parse_coloring(in).class_count() == 3);

  const Run w6 = run({"color", "--method", "dominating", tmp.graph("w6.txt", wheel(6))});
  CHECK(w6.code == 0);
  std::istringstream w6in(w6.out);
  CHECK(parse_coloring(w6in).class_count() == 3);

  const Run w4 = run({"color", "--method", "dominating", tmp.graph("w4.txt", wheel(4))});
  CHECK(w4.code == 2);
  CHECK(w4.err == "exception: W_4\n");

  const Run eul = run({"color", "--method", "eulerian-remove", tmp.graph("k3.txt", complete_graph(3))});
  CHECK(eul.code == 0);
  CHECK(eul.out.find("# removed edge: 0 1\n") != std::string::npos);
}

TEST_CASE("cli verify") {
  const Scratch tmp;
  const std::string c4 = tmp.graph("c4.txt", cycle_graph(4));
  CHECK(run({"verify", c4, tmp.file("alt.txt", "0 1 1\n1 2 2\n2 3 1\n0 3 2\n")}).code == 0);
  const Run p3 = run({"verify", tmp.graph("p3.txt", path_graph(3)), tmp.file("mono.txt", "0 1 1\n1 2 1\n")});
  CHECK(p3.code == 1);
  CHECK(p3.out == "violation: (vertex 1, class 1, degree 2)\n");
  const Run partial = run({"verify", c4, tmp.file("part.txt", "0 1 1\n")});
  CHECK(partial.code == 2);
  CHECK(partial.err.rfind("partial coloring", 0) == 0);
}

TEST_CASE("cli color output always verifies") {
  const Scratch tmp;
  std::vector<std::pair<std::string, Graph>> corpus = {
      {"tree", random_fixture(FixtureProfile::Tree, 3)},
      {"even-order", random_fixture(FixtureProfile::ConnectedEvenOrder, 3)},
      {"two-even", random_fixture(FixtureProfile::ThreeConnectedTwoEven, 3)},
      {"four-connected", random_fixture(FixtureProfile::FourConnectedOneEven, 3)},
      {"dominating", wheel(8)},
      {"auto", wheel(4)},
      {"auto", random_fixture(FixtureProfile::FourConnectedOddOrder, 3)},
  };
  int i = 0;
  for (const auto& [method, g] : corpus) {
    const std::string gp = tmp.graph("g" + std::to_string(i) + ".txt", g);
    const Run c = run({"color", "--method", method, gp});
    REQUIRE(c.code == 0);
    const std::string cp = tmp.file("c" + std::to_string(i++) + ".txt", c.out);
    const Run v = run({"verify", gp, cp});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("valid: ", 0) == 0);
  }
}

TEST_CASE("cli gen") {
  const Run w6 = run({"gen", "wheel", "6"});
  CHECK(w6.code == 0);
  CHECK(parse(w6.out).edge_count() == 12);
  const Graph k33 = parse(run({"gen", "hanrei", "k33"}).out);
  CHECK(k33.vertex_count() == 7);
  CHECK(k33.edge_count() == 11);
  CHECK(parse(run({"gen", "obstruction"}).out).vertex_count() == 27);
  const Run r1 = run({"gen", "random", "tree", "--seed", "9"});
  CHECK(r1.code == 0);
  CHECK(r1.out == run({"gen", "random", "tree", "--seed", "9"}).out);
  CHECK(parse(run({"gen", "circulant", "9", "1", "2"}).out) == circulant(9, {1, 2}));
  CHECK(run({"gen", "hanrei", "petersen"}).code == 2);
}

TEST_CASE("cli dot") {
  const Scratch tmp;
  const Run tri = run({"dot", tmp.graph("k3.txt", complete_graph(3))});
  CHECK(tri.code == 0);
  CHECK(count(tri.out, " -- ") == 3);

  const std::string w6 = tmp.graph("w6.txt", wheel(6));
  const std::string col = tmp.file("w6c.txt", run({"color", "--method", "dominating", w6}).out);
  const Run dot = run({"dot", w6, col});
  CHECK(dot.code == 0);
  CHECK(count(dot.out, " -- ") == 12);
  CHECK(count(dot.out, "color=red") > 0);
  CHECK(count(dot.out, "color=blue") > 0);
  CHECK(count(dot.out, "color=green") > 0);
}
