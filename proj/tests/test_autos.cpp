#include <doctest.h>

#include <random>
#include <thread>

#include "freecert/autos.hpp"
#include "freecert/certify.hpp"
#include "freecert/sampling.hpp"
#include "freecert/whgraph.hpp"
#include "support/oracles.hpp"

using namespace freecert;

namespace {

Word w2(std::string_view text) { return parse_word(text, 2); }

bool is_identity(const GeneratorMap& m) {
  for (int i = 1; i <= m.rank(); ++i) {
    if (m.image(i) != Word::generator(m.rank(), i)) return false;
  }
  return true;
}

// A random product of Whitehead moves.
GeneratorMap random_automorphism(int rank, std::size_t steps, Rng& rng) {
  const auto moves = enumerate_whitehead_autos(rank, RelabelingSet::kGenerators);
  GeneratorMap m = GeneratorMap::identity(rank);
  for (std::size_t i = 0; i < steps; ++i) {
    m = GeneratorMap::from(moves[uniform_below(rng, moves.size())]).compose(m);
  }
  return m;
}

}  // namespace

TEST_CASE("enumeration sizes and order") {
  auto count = [](int rank, WhiteheadAutomorphism::Kind kind, RelabelingSet set) {
    std::size_t n = 0;
    for (const auto& m : enumerate_whitehead_autos(rank, set)) n += m.kind() == kind;
    return n;
  };
  using K = WhiteheadAutomorphism::Kind;
  CHECK(count(1, K::kRelabeling, RelabelingSet::kAll) == 2);
  CHECK(count(1, K::kMultiplier, RelabelingSet::kAll) == 2);
  CHECK(count(2, K::kMultiplier, RelabelingSet::kAll) == 16);
  CHECK(count(2, K::kRelabeling, RelabelingSet::kAll) == 8);
  CHECK(count(3, K::kRelabeling, RelabelingSet::kAll) == 48);
  CHECK(count(3, K::kMultiplier, RelabelingSet::kAll) == 6 * 16);
  // Rank 1 multipliers act as the identity.
  for (const auto& m : enumerate_whitehead_autos(1)) {
    if (m.kind() == K::kMultiplier) CHECK(is_identity(GeneratorMap::from(m)));
  }
  const auto moves = enumerate_whitehead_autos(2);
  CHECK(moves.front().kind() == K::kRelabeling);
  CHECK(moves.back().kind() == K::kMultiplier);
  CHECK(moves == enumerate_whitehead_autos(2));
}

TEST_CASE("multiplier move images") {
  // a = x1, A = {x1, x2}: x2 -> x2 x1.
  const auto m = WhiteheadAutomorphism::multiplier(2, Letter(1, false), 0b0101);
  CHECK(m.apply(w2("b")) == w2("ba"));
  CHECK(m.apply(w2("a")) == w2("a"));
  // A = {x1, x2, x2^-1}: x2 -> x1^-1 x2 x1.
  const auto c = WhiteheadAutomorphism::multiplier(2, Letter(1, false), 0b1101);
  CHECK(c.apply(w2("b")) == w2("Aba"));
  CHECK_THROWS_AS(WhiteheadAutomorphism::multiplier(2, Letter(1, false), 0b0011), InputError);
  CHECK_THROWS_AS(WhiteheadAutomorphism::multiplier(2, Letter(1, false), 0b0100), InputError);
}

TEST_CASE("every move is invertible and unimodular") {
  for (int rank = 1; rank <= 3; ++rank) {
    for (const auto& m : enumerate_whitehead_autos(rank)) {
      const GeneratorMap f = GeneratorMap::from(m);
      const GeneratorMap g = GeneratorMap::from(m.inverse());
      CHECK(is_identity(f.compose(g)));
      CHECK(is_identity(g.compose(f)));
      const auto det = determinant(abelian_matrix(f));
      CHECK((det == 1 || det == -1));
      CHECK(is_possibly_automorphism(f));
    }
  }
}

TEST_CASE("endomorphisms of the worked example") {
  const Word u1 = w2("aabba");
  const GeneratorMap phi1(2, {invert(u1), power(u1, 2)});
  CHECK(apply_endo(phi1, u1) == u1);
  CHECK(determinant(abelian_matrix(phi1)) == 0);
  CHECK_FALSE(is_possibly_automorphism(phi1));

  const Word u2 = w2("abABa");
  const GeneratorMap phi2(2, {u2, u2});
  CHECK(apply_endo(phi2, u2) == u2);
  CHECK(determinant(abelian_matrix(phi2)) == 0);

  const Word w = w2("abAAB");
  CHECK(apply_endo(GeneratorMap::identity(2), w) == w);
  CHECK(is_possibly_automorphism(GeneratorMap::identity(2)));
  CHECK(determinant({{2, 1}, {7, 4}}) == 1);
  CHECK(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
}

TEST_CASE("generator map text") {
  const GeneratorMap m = parse_generator_map("# phi\nx1 -> x1 x1 x2^-1\nx2 -> x1 x1\n", 2);
  CHECK(m.image(2) == w2("aa"));
  const GeneratorMap partial = parse_generator_map("x2 -> ab", 2);
  CHECK(partial.image(1) == w2("a"));
  CHECK(parse_generator_map(to_string(partial), 2).images() == partial.images());
  CHECK_THROWS_AS(parse_generator_map("x3 -> a", 2), ParseError);
  CHECK_THROWS_AS(parse_generator_map("x1 = a", 2), ParseError);
  try {
    (void)parse_generator_map("x1 -> a\nx2 -> a?b", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 15);
  }
}

TEST_CASE("homomorphism property") {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + trial % 3;
    std::vector<Word> images;
    for (int i = 0; i < rank; ++i) images.push_back(random_reduced_word(rank, uniform_below(rng, 5), rng));
    const GeneratorMap m(rank, images);
    const Word u = random_reduced_word(rank, uniform_below(rng, 9), rng);
    const Word v = random_reduced_word(rank, uniform_below(rng, 9), rng);
    CHECK(apply_endo(m, concat(u, v)) == concat(apply_endo(m, u), apply_endo(m, v)));
    CHECK(apply_endo(m, invert(u)) == invert(apply_endo(m, u)));
  }
}

TEST_CASE("minimization examples") {
  CHECK(whitehead_minimize(CyclicWord(w2("ab"))).minimal.size() == 1);
  CHECK(whitehead_minimize(CyclicWord(w2("aabb"))).minimal.size() == 4);
  CHECK(whitehead_minimize(CyclicWord(w2("abAB"))).minimal.size() == 4);
  CHECK(is_whitehead_minimal(CyclicWord(w2("aabb"))));
  CHECK_FALSE(is_whitehead_minimal(CyclicWord(w2("ab"))));
  CHECK(is_whitehead_minimal(CyclicWord(Word(2))));

  // Replaying the trail reproduces the result.
  const CyclicWord start(w2("aabaBabb"));
  const Minimization m = whitehead_minimize(start);
  CyclicWord replay = start;
  for (const auto& move : m.trail) replay = move.apply(replay);
  CHECK(replay == m.minimal);
}

TEST_CASE("minimization properties") {
  Rng rng(32);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 1 + trial % 3;
    const CyclicWord w(random_cyclically_reduced_word(rank, uniform_below(rng, 11), rng));
    const Minimization m = whitehead_minimize(w);
    CHECK(m.minimal.size() <= w.size());
    CHECK(is_whitehead_minimal(m.minimal));
  }
}

TEST_CASE("a word that is not cyclically reduced has a shortening conjugation") {
  Rng rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + trial % 3;
    const Word core = random_cyclically_reduced_word(rank, 1 + uniform_below(rng, 6), rng);
    const Word t = random_reduced_word(rank, 1 + uniform_below(rng, 4), rng);
    const Word u = conjugate(core, t);
    if (u.is_cyclically_reduced()) continue;
    const Word x = Word::generator(rank, u.front().index(), u.front().inverted());
    CHECK(conjugate(u, invert(x)).size() + 2 == u.size());
  }
}

TEST_CASE("simplicity examples") {
  CHECK(is_simple(w2("a")));
  CHECK(is_simple(w2("ab")));
  CHECK_FALSE(is_simple(w2("aabb")));
  CHECK_FALSE(is_simple(w2("abAB")));
  CHECK(is_simple(Word(2)));
  CHECK(is_simple(w2("aaaa")));
  CHECK(is_test_element_for_monos(w2("aabba")));
  CHECK_FALSE(is_test_element_for_monos(w2("a")));
  CHECK(is_test_element_for_monos(w2("abABa")));
  // Nontrivial elements of rank 1 lie in no proper free factor.
  CHECK_FALSE(is_simple(parse_word("aa")));
  CHECK(is_simple(parse_word("ab", 3)));
}

TEST_CASE("oracle agrees with the rank 2 primitive classification") {
  const auto primitives = oracle::primitive_classes_rank2(10);
  SimplicityOracle fresh;
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t mismatches = 0;
    for_each_cyclically_reduced(2, n, [&](const Word& w) {
      mismatches += fresh.is_simple(w) != oracle::is_simple_rank2(oracle::raw_of(w), primitives);
    });
    CHECK_MESSAGE(mismatches == 0, "length " << n);
  }
}

TEST_CASE("minimal length of rank 2 simple words is the root exponent") {
  const auto primitives = oracle::primitive_classes_rank2(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    for_each_cyclically_reduced(2, n, [&](const Word& w) {
      if (!oracle::is_simple_rank2(oracle::raw_of(w), primitives)) return;
      const std::size_t period = primitive_period(w.letters());
      CHECK(whitehead_minimize(CyclicWord(w)).minimal.size() == n / period);
    });
  }
}

TEST_CASE("simplicity is invariant under automorphisms") {
  Rng rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = 2 + trial % 2;
    const Word w = random_cyclically_reduced_word(rank, 1 + uniform_below(rng, 10), rng);
    const auto moves = enumerate_whitehead_autos(rank);
    const auto& move = moves[uniform_below(rng, moves.size())];
    CHECK(is_simple(w) == is_simple(move.apply(w)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const GeneratorMap phi = random_automorphism(3, 6, rng);
    // Words in <x1, x2> are simple at rank 3; images stay simple.
    const Word inside = random_reduced_word(2, 1 + uniform_below(rng, 6), rng);
    const Word lifted(3, inside.letters());
    CHECK(is_simple(apply_endo(phi, lifted)));
    CHECK_FALSE(is_simple(apply_endo(phi, squares_word(3))));
  }
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  SimplicityOracle tiny(OracleOptions{1});
  bool thrown = false;
  for (const char* text : {"aabbcc", "abcABC", "aabbccabc", "abcacbAAB"}) {
    try {
      (void)tiny.is_simple(parse_word(text, 3));
    } catch (const BudgetExceeded&) {
      thrown = true;
    }
  }
  CHECK(thrown);
}

TEST_CASE("memoised oracle answers agree across threads") {
  Rng rng(35);
  std::vector<Word> words;
  for (int i = 0; i < 200; ++i) words.push_back(random_cyclically_reduced_word(3, 1 + uniform_below(rng, 8), rng));
  SimplicityOracle reference;
  std::vector<bool> expected;
  for (const auto& w : words) expected.push_back(reference.is_simple(w));

  SimplicityOracle shared;
  std::vector<std::vector<bool>> got(4, std::vector<bool>(words.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < got.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < words.size(); ++i) {
        const std::size_t j = (i + 37 * t) % words.size();
        got[t][j] = shared.is_simple(words[j]);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& g : got) CHECK(g == expected);
  CHECK(shared.memo_size() > 0);
}
