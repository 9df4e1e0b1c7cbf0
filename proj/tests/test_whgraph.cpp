#include <doctest.h>

#include <random>

#include "freecert/sampling.hpp"
#include "freecert/serialize.hpp"
#include "freecert/whgraph.hpp"
#include "support/oracles.hpp"

using namespace freecert;

namespace {

Word w2(std::string_view text) { return parse_word(text, 2); }

std::set<oracle::Edge> edges_of(const WhiteheadGraph& g) {
  std::set<oracle::Edge> out;
  for (const auto& [x, y] : g.edges()) {
    const int sx = x.inverted() ? -x.index() : x.index();
    const int sy = y.inverted() ? -y.index() : y.index();
    out.insert({std::min(sx, sy), std::max(sx, sy)});
  }
  return out;
}

std::set<int> cuts_of(const WhiteheadGraph& g) {
  std::set<int> out;
  for (Letter l : cut_vertices(g)) out.insert(l.inverted() ? -l.index() : l.index());
  return out;
}

WhiteheadGraph random_graph(int rank, std::mt19937_64& rng) {
  WhiteheadGraph g(rank);
  const int n = 2 * rank;
  const unsigned density = static_cast<unsigned>(rng() % 100);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 100 < density) g.add_edge(Letter::from_code(u), Letter::from_code(v));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("Whitehead graph examples") {
  using E = std::set<oracle::Edge>;
  // {x1,x2'}, {x1,x2}, {x1',x2}, {x1',x2'}
  CHECK(edges_of(build_whitehead_graph(w2("abAB"))) == E{{-2, 1}, {1, 2}, {-1, 2}, {-2, -1}});
  // {x1,x1'}, {x1,x2'}, {x2,x2'}, {x2,x1'}
  CHECK(edges_of(build_whitehead_graph(w2("aabb"))) == E{{-1, 1}, {-2, 1}, {-2, 2}, {-1, 2}});
  CHECK(build_whitehead_graph(w2("a")).edge_count() == 0);
  CHECK(build_whitehead_graph(w2("a")).vertex_count() == 4);
  // The graph is built from the cyclic reduction.
  CHECK(build_whitehead_graph(w2("babbbB")) == build_whitehead_graph(w2("abb")));
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(build_whitehead_graph(w2("aabb"))).empty());
  const auto aba = cut_vertices(build_whitehead_graph(w2("aba")));
  CHECK(std::find(aba.begin(), aba.end(), Letter(1, false)) != aba.end());
  // Literal reading on an edgeless graph: every deletion leaves 3 isolated vertices.
  CHECK(cut_vertices(build_whitehead_graph(w2("a"))).size() == 4);
  CHECK(has_cut_vertex(build_whitehead_graph(w2("a"))));
  // Rank 1: deleting a vertex leaves a single vertex, which is connected.
  CHECK_FALSE(has_cut_vertex(build_whitehead_graph(parse_word("a"))));
  CHECK_FALSE(has_cut_vertex(build_whitehead_graph(parse_word("aa"))));
}

TEST_CASE("subgraphs and connectivity") {
  const auto comm = build_whitehead_graph(w2("abAB"));
  CHECK(is_subgraph(build_whitehead_graph(w2("ab")), comm));
  CHECK(is_subgraph(comm, comm));
  CHECK_FALSE(is_subgraph(build_whitehead_graph(w2("aabb")), comm));
  CHECK_THROWS_AS(is_subgraph(comm, build_whitehead_graph(parse_word("abc"))), RankMismatch);
  CHECK(is_connected(comm));
  CHECK_FALSE(is_connected(build_whitehead_graph(w2("a"))));
  CHECK(is_connected(build_whitehead_graph(w2("aabb"))));
  CHECK_THROWS_AS(WhiteheadGraph(2).add_edge(Letter(1, false), Letter(1, false)), InputError);
}

TEST_CASE("DOT and JSON output") {
  const std::string empty = to_dot(build_whitehead_graph(w2("a")));
  CHECK(empty == "graph whitehead {\n  \"x1\";\n  \"x1'\";\n  \"x2\";\n  \"x2'\";\n}\n");
  const std::string dot = to_dot(build_whitehead_graph(w2("aabb")));
  CHECK(std::count(dot.begin(), dot.end(), '-') == 8);
  CHECK(dot == to_dot(build_whitehead_graph(w2("aabb"))));
  const Json j = to_json(build_whitehead_graph(w2("aabb")));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("edges").size() == 4);
  CHECK(j.at("edges").at(0) == Json::array({"x1", "x1'"}));
  CHECK(graph_from_json(j) == build_whitehead_graph(w2("aabb")));
}

TEST_CASE("graph construction agrees with the definition") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 4000; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    const oracle::Raw raw = oracle::random_raw(rank, rng() % 17, rng);
    const WhiteheadGraph g = build_whitehead_graph(oracle::word_of(raw, rank));
    CHECK(edges_of(g) == oracle::wh_edges(raw));
    CHECK(cuts_of(g) == oracle::cut_vertices(rank, oracle::wh_edges(raw)));
  }
}

TEST_CASE("articulation points agree with vertex deletion on random graphs") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 3000; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 5);
    const WhiteheadGraph g = random_graph(rank, rng);
    CHECK(cuts_of(g) == oracle::cut_vertices(rank, edges_of(g)));
    CHECK(is_connected(g) == oracle::connected_without(rank, edges_of(g), std::nullopt));
    CHECK(has_cut_vertex(g) == !cut_vertices(g).empty());
  }
}

TEST_CASE("conjugation and inversion invariance") {
  Rng rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const int rank = 1 + trial % 4;
    const Word w = random_reduced_word(rank, uniform_below(rng, 17), rng);
    const Word t = random_reduced_word(rank, uniform_below(rng, 8), rng);
    const WhiteheadGraph g = build_whitehead_graph(w);
    CHECK(build_whitehead_graph(conjugate(w, t)) == g);
    CHECK(build_whitehead_graph(invert(w)) == g);
  }
}

TEST_CASE("bigram inclusion gives a subgraph and cut vertices pass down") {
  Rng rng(24);
  int tested = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int rank = 2 + trial % 3;
    const Word v = random_cyclically_reduced_word(rank, 2 + uniform_below(rng, 12), rng);
    const auto u = random_bigram_walk(v, 40, rng);
    if (!u) continue;
    ++tested;
    // Check the premise independently.
    const auto bv = cyclic_bigrams(CyclicWord(v));
    const auto bvi = cyclic_bigrams(CyclicWord(invert(v)));
    for (const Bigram& p : cyclic_bigrams(CyclicWord(*u))) CHECK((bv.count(p) + bvi.count(p)) > 0);
    const auto gu = build_whitehead_graph(*u);
    const auto gv = build_whitehead_graph(v);
    REQUIRE(is_subgraph(gu, gv));
    const auto cu = cuts_of(gu);
    for (int c : cuts_of(gv)) CHECK(cu.count(c) == 1);
  }
  CHECK(tested > 2000);
}

TEST_CASE("subgraph relation transfers cut vertices on random graph pairs") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 2000; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    const WhiteheadGraph big = random_graph(rank, rng);
    WhiteheadGraph small(rank);
    for (const auto& [x, y] : big.edges()) {
      if (rng() % 3 != 0) small.add_edge(x, y);
    }
    REQUIRE(is_subgraph(small, big));
    const auto cs = cuts_of(small);
    for (int c : cuts_of(big)) CHECK(cs.count(c) == 1);
    if (!has_cut_vertex(small)) CHECK_FALSE(has_cut_vertex(big));
  }
}

TEST_CASE("powers have the same graph") {
  Rng rng(26);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rank = 1 + trial % 4;
    const Word w = random_cyclically_reduced_word(rank, 2 + uniform_below(rng, 10), rng);
    for (long n = 2; n <= 4; ++n) CHECK(build_whitehead_graph(power(w, n)) == build_whitehead_graph(w));
  }
}
