#include "freecert/harness.hpp"

#include <algorithm>
#include <thread>

#include "freecert/sampling.hpp"
#include "freecert/whgraph.hpp"

namespace freecert {

namespace {

constexpr std::size_t kMaxViolationExamples = 10;

struct WordResult {
  enum class Oracle { kSimple, kNonSimple, kUndecided } oracle = Oracle::kUndecided;
  bool squares = false;
  bool commutators = false;
  bool theorem = false;
  bool any_undecided = false;
  bool squares_pattern = false;
};

bool certified(const Certificate& c) { return c.verdict == Verdict::kNonSimpleCertified; }

WordResult evaluate(const Word& a, const CorpusConfig& config) {
  WordResult r;
  SimplicityOracle& oracle =
      config.certify.oracle != nullptr ? *config.certify.oracle : default_oracle();
  try {
    r.oracle = oracle.is_simple(a) ? WordResult::Oracle::kSimple : WordResult::Oracle::kNonSimple;
  } catch (const BudgetExceeded&) {
    r.oracle = WordResult::Oracle::kUndecided;
  }
  if (a.rank() < 2 || a.empty()) return r;

  const auto note = [&r](const Certificate& c) {
    if (c.verdict == Verdict::kUndecided) r.any_undecided = true;
    return certified(c);
  };
  const Certificate squares = certify_squares_subword(a, config.certify);
  r.squares_pattern = !squares.trail.failed || *squares.trail.failed != "pattern";
  r.squares = note(squares);
  if (a.rank() % 2 == 0) r.commutators = note(certify_commutator_subword(a, config.certify));
  r.theorem = note(certify_via_theorem(squares_word(a.rank()), a, config.certify));
  if (a.rank() % 2 == 0) {
    r.theorem = note(certify_via_theorem(commutator_word(a.rank()), a, config.certify)) || r.theorem;
  }
  return r;
}

std::vector<Word> corpus_words(const CorpusConfig& config, bool& exhaustive) {
  std::vector<Word> words;
  exhaustive = !config.count.has_value();
  if (exhaustive) {
    const auto total = count_cyclically_reduced(config.rank, config.length, config.exhaustive_limit);
    if (total > config.exhaustive_limit) {
      throw InputError("exhaustive corpus over rank " + std::to_string(config.rank) + " length " +
                       std::to_string(config.length) + " exceeds the limit of " +
                       std::to_string(config.exhaustive_limit) + " words");
    }
    words.reserve(static_cast<std::size_t>(total));
    for_each_cyclically_reduced(config.rank, config.length,
                                [&words](const Word& w) { words.push_back(w); });
    return words;
  }
  Rng rng(config.seed);
  words.reserve(*config.count);
  for (std::size_t i = 0; i < *config.count; ++i) {
    words.push_back(random_cyclically_reduced_word(config.rank, config.length, rng));
  }
  return words;
}

double fraction(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

CorpusStats run_corpus(const CorpusConfig& config) {
  if (config.rank < 1) throw InputError("rank must be at least 1");
  if (config.length < 1) throw InputError("corpus words need length at least 1");
  if (config.rank > WhiteheadGraph::kMaxRank) throw InputError("rank too large");

  CorpusStats stats;
  stats.config = config;
  const std::vector<Word> words = corpus_words(config, stats.exhaustive);
  std::vector<WordResult> results(words.size());

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(words.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) results[i] = evaluate(words[i], config);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < words.size(); i += jobs) results[i] = evaluate(words[i], config);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  stats.words = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const WordResult& r = results[i];
    switch (r.oracle) {
      case WordResult::Oracle::kSimple: ++stats.simple; break;
      case WordResult::Oracle::kNonSimple: ++stats.non_simple; break;
      case WordResult::Oracle::kUndecided: ++stats.undecided; break;
    }
    stats.certified_squares += r.squares;
    stats.certified_commutators += r.commutators;
    stats.certified_theorem += r.theorem;
    const bool any = r.squares || r.commutators || r.theorem;
    stats.certified_any += any;
    stats.undecided_certificates += r.any_undecided;
    stats.squares_pattern += r.squares_pattern;
    const bool simple = r.oracle == WordResult::Oracle::kSimple;
    stats.squares_pattern_simple += r.squares_pattern && simple;
    if (any && simple) {
      ++stats.violations;
      if (stats.violation_examples.size() < kMaxViolationExamples) {
        stats.violation_examples.push_back(words[i]);
      }
    }
  }
  return stats;
}

Json to_json(const CorpusStats& s) {
  Json examples = Json::array();
  for (const Word& w : s.violation_examples) examples.push_back(to_string(w));
  const std::size_t decided = s.simple + s.non_simple;
  return Json{
      {"schema", kSchemaVersion},
      {"rank", s.config.rank},
      {"length", s.config.length},
      {"mode", s.exhaustive ? "exhaustive" : "sampled"},
      {"seed", s.config.seed},
      {"words", s.words},
      {"oracle", {{"simple", s.simple}, {"non_simple", s.non_simple}, {"undecided", s.undecided}}},
      {"certified",
       {{"COR_SQUARES", s.certified_squares},
        {"COR_COMMUTATORS", s.certified_commutators},
        {"THEOREM_OVERLAP", s.certified_theorem},
        {"any", s.certified_any},
        {"undecided", s.undecided_certificates}}},
      {"fractions",
       {{"simple", fraction(s.simple, decided)},
        {"non_simple", fraction(s.non_simple, decided)},
        {"COR_SQUARES", fraction(s.certified_squares, s.words)},
        {"COR_COMMUTATORS", fraction(s.certified_commutators, s.words)},
        {"THEOREM_OVERLAP", fraction(s.certified_theorem, s.words)},
        {"any", fraction(s.certified_any, s.words)}}},
      {"squares_pattern", {{"words", s.squares_pattern}, {"oracle_simple", s.squares_pattern_simple}}},
      {"violations", s.violations},
      {"violation_examples", std::move(examples)}};
}

namespace {

std::string counted(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

// Conjugation and inversion leave the Whitehead graph unchanged.
void check_invariance(Report& report, const PaperConfig& config, Rng& rng) {
  std::size_t failures = 0;
  std::string example;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const Word w = random_reduced_word(config.rank, 1 + uniform_below(rng, 16), rng);
    const Word t = random_reduced_word(config.rank, uniform_below(rng, 6), rng);
    const WhiteheadGraph g = build_whitehead_graph(w);
    if (g != build_whitehead_graph(conjugate(w, t)) || g != build_whitehead_graph(invert(w))) {
      if (failures++ == 0) example = to_string(w) + " / " + to_string(t);
    }
  }
  report.add("graph.invariance", failures == 0,
             failures == 0 ? counted(config.samples, "words") : "counterexample " + example);
}

// A word built only from cyclic bigrams of v and v^-1 has Wh inside Wh(v),
// and every cut vertex of Wh(v) stays a cut vertex of the smaller graph.
void check_bigram_subgraph(Report& report, const PaperConfig& config, Rng& rng) {
  std::size_t tested = 0;
  std::size_t subgraph_failures = 0;
  std::size_t cut_failures = 0;
  std::size_t cut_cases = 0;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const Word v = random_cyclically_reduced_word(config.rank, 2 + uniform_below(rng, 15), rng);
    const auto u = random_bigram_walk(v, 3 * v.size() + 4, rng);
    if (!u) continue;
    ++tested;
    const WhiteheadGraph gu = build_whitehead_graph(*u);
    const WhiteheadGraph gv = build_whitehead_graph(v);
    if (!is_subgraph(gu, gv)) ++subgraph_failures;
    const auto cuts_v = cut_vertices(gv);
    const auto cuts_u = cut_vertices(gu);
    if (!cuts_v.empty()) ++cut_cases;
    if (!std::includes(cuts_u.begin(), cuts_u.end(), cuts_v.begin(), cuts_v.end())) ++cut_failures;
  }
  report.add("graph.bigram_subgraph", subgraph_failures == 0 && tested > 0,
             counted(tested, "pairs") + ", " + counted(subgraph_failures, "failures"));
  report.add("graph.cut_vertex_transfer", cut_failures == 0 && tested > 0,
             counted(tested, "pairs") + " (" + counted(cut_cases, "with cut vertices") + "), " +
                 counted(cut_failures, "failures"));
}

struct Dichotomy {
  std::size_t minimal_simple = 0;
  std::size_t minimal_non_simple = 0;
  std::size_t simple_failures = 0;
  std::size_t non_simple_failures = 0;
  std::size_t undecided = 0;
};

void classify(const Word& w, SimplicityOracle& oracle, Dichotomy& d) {
  if (w.empty() || !is_whitehead_minimal(CyclicWord(w))) return;
  bool simple = false;
  try {
    simple = oracle.is_simple(w);
  } catch (const BudgetExceeded&) {
    ++d.undecided;
    return;
  }
  const bool cut = has_cut_vertex(build_whitehead_graph(w));
  if (simple) {
    ++d.minimal_simple;
    d.simple_failures += !cut;
  } else {
    ++d.minimal_non_simple;
    d.non_simple_failures += cut;
  }
}

// Minimal simple words have a cut vertex; minimal non-simple words do not.
void check_dichotomy(Report& report, const PaperConfig& config, Rng& rng) {
  SimplicityOracle& oracle = config.oracle != nullptr ? *config.oracle : default_oracle();
  Dichotomy d;
  std::string scope;
  if (config.rank == 2) {
    for (std::size_t n = 1; n <= config.exhaustive_length; ++n) {
      for_each_cyclically_reduced(2, n, [&](const Word& w) { classify(w, oracle, d); });
    }
    scope = "exhaustive to length " + std::to_string(config.exhaustive_length);
  } else {
    const std::size_t samples = std::max<std::size_t>(1, config.samples / 10);
    for (std::size_t i = 0; i < samples; ++i) {
      const Word w = random_cyclically_reduced_word(config.rank, 1 + uniform_below(rng, 8), rng);
      classify(whitehead_minimize(CyclicWord(w)).minimal.word(), oracle, d);
    }
    scope = counted(samples, "minimized samples");
  }
  const std::string tail = d.undecided == 0 ? "" : ", " + counted(d.undecided, "undecided");
  report.add("minimal.simple_has_cut_vertex", d.simple_failures == 0,
             scope + ", " + counted(d.minimal_simple, "minimal simple words") + ", " +
                 counted(d.simple_failures, "failures") + tail);
  report.add("minimal.non_simple_cut_free", d.non_simple_failures == 0,
             scope + ", " + counted(d.minimal_non_simple, "minimal non-simple words") + ", " +
                 counted(d.non_simple_failures, "failures") + tail);
}

}  // namespace

Report verify_paper(const PaperConfig& config) {
  if (config.rank < 2 || config.rank > WhiteheadGraph::kMaxRank) {
    throw InputError("verify-paper needs rank between 2 and " +
                     std::to_string(WhiteheadGraph::kMaxRank));
  }
  Report report = verify_prop_2_3(config.rank);
  report.append(verify_example_4_6(config.rank, config.oracle));
  Rng rng(config.seed);
  check_invariance(report, config, rng);
  check_bigram_subgraph(report, config, rng);
  check_dichotomy(report, config, rng);
  return report;
}

}  // namespace freecert
