#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "freecert/certify.hpp"
#include "freecert/serialize.hpp"

namespace freecert {

struct CorpusConfig {
  int rank = 2;
  std::size_t length = 8;
  /// nullopt enumerates every cyclically reduced word of the length.
  std::optional<std::size_t> count = 1000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::uint64_t exhaustive_limit = 5'000'000;
  CertifyOptions certify;
};

struct CorpusStats {
  CorpusConfig config;
  bool exhaustive = false;
  std::size_t words = 0;
  std::size_t simple = 0;
  std::size_t non_simple = 0;
  std::size_t undecided = 0;
  std::size_t certified_squares = 0;
  std::size_t certified_commutators = 0;
  std::size_t certified_theorem = 0;
  std::size_t certified_any = 0;
  std::size_t undecided_certificates = 0;
  std::size_t squares_pattern = 0;
  std::size_t squares_pattern_simple = 0;
  std::size_t violations = 0;
  std::vector<Word> violation_examples;
};

/// Samples (or enumerates) cyclically reduced words and runs the oracle and
/// every certification rule on each. Deterministic for a given config; with
/// jobs > 1 words are evaluated on worker threads and merged in input order.
CorpusStats run_corpus(const CorpusConfig& config);
Json to_json(const CorpusStats& stats);

struct PaperConfig {
  int rank = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 2000;
  /// Cyclic length bound for the exhaustive rank-2 cut-vertex checks.
  std::size_t exhaustive_length = 6;
  SimplicityOracle* oracle = nullptr;
};

/// Regression suite for the builtin words and the Whitehead-graph lemmas:
/// minimality and cut-vertex freeness of the builtin pivots, the two
/// non-automorphic endomorphisms fixing u1 and u2, conjugation/inversion
/// invariance of Whitehead graphs, bigram inclusion implying subgraph,
/// cut vertices passing from a graph to its subgraphs, and the cut-vertex
/// dichotomy for minimal simple vs non-simple words.
Report verify_paper(const PaperConfig& config);

}  // namespace freecert
