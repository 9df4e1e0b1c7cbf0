#include <doctest.h>

#include <random>

#include "freecert/axes.hpp"
#include "freecert/sampling.hpp"
#include "freecert/serialize.hpp"
#include "freecert/whgraph.hpp"
#include "support/oracles.hpp"

using namespace freecert;

namespace {

Word w2(std::string_view text) { return parse_word(text, 2); }

bool commute(const Word& g, const Word& h) { return concat(g, h) == concat(h, g); }

}  // namespace

TEST_CASE("axis decomposition") {
  const Axis a = axis(w2("aabba"));
  CHECK(a.conjugator.empty());
  CHECK(a.core == w2("aabba"));
  const Axis b = axis(w2("abA"));
  CHECK(b.conjugator == w2("a"));
  CHECK(b.core == w2("b"));
  CHECK(b.translation_length() == 1);
  CHECK(b.element() == w2("abA"));
  CHECK(same_line(axis(w2("B")), axis(w2("b"))));
  CHECK_THROWS_AS(axis(Word(2)), InputError);
}

TEST_CASE("axis membership") {
  CHECK(on_axis(Word(2), w2("ab")));
  CHECK_FALSE(on_axis(Word(2), w2("abA")));
  CHECK(on_axis(w2("ab"), w2("aba")));
  CHECK_THROWS_AS(on_axis(Word(2), Word(2)), InputError);
}

TEST_CASE("axis vertices") {
  CHECK(axis_vertex(axis(w2("ab")), 3) == w2("aba"));
  CHECK(axis_vertex(axis(w2("ab")), -1) == w2("B"));
  CHECK(axis_vertex(axis(w2("abA")), 0) == w2("a"));
  CHECK(axis_vertex(axis(w2("aabba")), 5) == w2("aabba"));
}

TEST_CASE("same line") {
  CHECK(same_line(axis(w2("ab")), axis(w2("abab"))));
  CHECK_FALSE(same_line(axis(w2("ab")), axis(w2("ba"))));
  CHECK(same_line(axis(w2("ab")), axis(w2("BA"))));
  CHECK_FALSE(same_line(axis(w2("a")), axis(w2("b"))));
  CHECK(same_line(axis(w2("abA")), axis(w2("aBA"))));
  CHECK_FALSE(same_line(axis(w2("abA")), axis(w2("b"))));
}

TEST_CASE("overlap examples") {
  const AxisOverlap o = overlap(w2("aabba"), w2("aabb"));
  CHECK_FALSE(o.infinite);
  CHECK(o.vertex_count == 7);
  CHECK(o.edge_length() == 6);
  CHECK(*o.endpoint_low == Word(2));
  CHECK(*o.endpoint_high == w2("aabbaa"));
  CHECK(overlap(w2("a"), w2("b")).vertex_count == 1);
  CHECK(overlap(w2("a"), w2("aabb")).vertex_count == 3);
  CHECK(overlap(w2("ab"), w2("abab")).infinite);
  // Disjoint axes: x1 and a conjugate of x1 by x2.
  const AxisOverlap none = overlap(w2("a"), w2("bbaBB"));
  CHECK(none.vertex_count == 0);
  CHECK_FALSE(none.endpoint_low.has_value());
  CHECK_THROWS_AS(overlap(w2("a"), w2("bbbbbbaBBBBBB"), 2), WindowExhausted);

  const Json j = to_json(o);
  CHECK(j.at("overlap") == 7);
  CHECK(j.at("endpoints") == Json::array({"1", "aabbaa"}));
  CHECK(to_json(overlap(w2("a"), w2("aa"))).at("overlap") == "infinite");
}

TEST_CASE("overlap agrees with a ball scan") {
  std::mt19937_64 rng(41);
  int finite = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const oracle::Raw g = oracle::random_raw(2, 1 + rng() % 4, rng);
    const oracle::Raw h = oracle::random_raw(2, 1 + rng() % 4, rng);
    const Word wg = oracle::word_of(g, 2);
    const Word wh = oracle::word_of(h, 2);
    const AxisOverlap o = overlap(wg, wh);
    if (o.infinite) {
      CHECK(commute(wg, wh));
      continue;
    }
    ++finite;
    CHECK_FALSE(commute(wg, wh));
    // A common segment of distinct axes stays within |g| + |h| of the origin.
    CHECK(o.vertex_count == oracle::overlap_in_ball(2, g, h, wg.size() + wh.size()));
  }
  CHECK(finite > 100);
}

TEST_CASE("axis properties on random elements") {
  Rng rng(42);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 1 + trial % 3;
    const Word g = random_reduced_word(rank, 1 + uniform_below(rng, 10), rng);
    const Axis a = axis(g);
    for (long i = -20; i <= 20; ++i) {
      const Word v = axis_vertex(a, i);
      CHECK(on_axis(v, g));
      CHECK(oracle::on_axis(oracle::raw_of(v), oracle::raw_of(g)));
      const Word next = axis_vertex(a, i + 1);
      CHECK(concat(invert(v), next).size() == 1);
    }
    const long n = static_cast<long>(a.translation_length());
    CHECK(axis_vertex(a, n) == concat(g, axis_vertex(a, 0)));
    CHECK(axis_vertex(a, 3 + n) == concat(g, axis_vertex(a, 3)));
    // Membership agrees with the displacement characterization off the axis too.
    const Word u = random_reduced_word(rank, uniform_below(rng, 8), rng);
    CHECK(on_axis(u, g) == oracle::on_axis(oracle::raw_of(u), oracle::raw_of(g)));
  }
}

TEST_CASE("overlap symmetry, inversion and equivariance") {
  Rng rng(43);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 2 + trial % 2;
    const Word g = random_reduced_word(rank, 1 + uniform_below(rng, 8), rng);
    const Word h = random_reduced_word(rank, 1 + uniform_below(rng, 8), rng);
    const Word u = random_reduced_word(rank, uniform_below(rng, 6), rng);
    const AxisOverlap o = overlap(g, h);
    const auto same = [&o](const AxisOverlap& p) {
      return p.infinite == o.infinite && (o.infinite || p.vertex_count == o.vertex_count);
    };
    CHECK(same(overlap(h, g)));
    CHECK(same(overlap(invert(g), h)));
    CHECK(same(overlap(conjugate(g, u), conjugate(h, u))));
    CHECK(o.infinite == commute(g, h));
    if (!o.infinite && o.vertex_count > 0) {
      CHECK(concat(invert(*o.endpoint_low), *o.endpoint_high).size() == o.vertex_count - 1);
      CHECK(on_axis(*o.endpoint_low, g));
      CHECK(on_axis(*o.endpoint_high, h));
    }
    const long n = 1 + static_cast<long>(uniform_below(rng, 3));
    CHECK(overlap(g, power(g, n)).infinite);
    CHECK(overlap(g, power(g, -n)).infinite);
  }
}

TEST_CASE("find_k examples") {
  CHECK(find_k(w2("aabb"), w2("aabba")) == 1);
  CHECK(find_k(w2("b"), w2("aabba")) == 1);
  CHECK(find_k(w2("ab"), w2("aba")) == 1);
  CHECK(find_k(w2("aabb"), w2("a")) == std::nullopt);
  CHECK_THROWS_AS(find_k(w2("abA"), w2("a")), InputError);
  CHECK_THROWS_AS(find_k(w2("ab"), Word(2)), InputError);
}

TEST_CASE("long common segments give a subgraph witness") {
  Rng rng(44);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 300; ++trial) {
    const int rank = 2 + trial % 2;
    const Word w = random_cyclically_reduced_word(rank, 2 + uniform_below(rng, 4), rng);
    // Sample a around w so that long overlaps actually occur.
    const Word tail = random_reduced_word(rank, uniform_below(rng, 6), rng);
    const Word t = random_reduced_word(rank, uniform_below(rng, 3), rng);
    const Word a = conjugate(concat(power(w, 1 + static_cast<long>(uniform_below(rng, 2))), tail), t);
    if (a.empty()) continue;
    const AxisOverlap o = overlap(a, w);
    if (!o.infinite && o.edge_length() < w.size() + 1) continue;
    ++tested;
    const auto k = find_k(w, a);
    REQUIRE(k.has_value());
    CHECK(std::labs(*k) <= static_cast<long>(w.size()) + 2);
    CHECK(is_subgraph(build_whitehead_graph(w), build_whitehead_graph(power(a, *k))));
  }
  CHECK(tested >= 300);
}
