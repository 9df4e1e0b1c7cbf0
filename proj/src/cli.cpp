#include "freecert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>

#include "freecert/axes.hpp"
#include "freecert/certify.hpp"
#include "freecert/harness.hpp"
#include "freecert/serialize.hpp"
#include "freecert/whgraph.hpp"

namespace freecert {

namespace {

struct Globals {
  std::optional<int> rank;
  bool json = false;
  std::size_t oracle_budget = OracleOptions{}.max_visited;
  std::optional<std::size_t> overlap_cap;
  std::optional<long> k_bound;
};

struct Context {
  Globals globals;
  std::ostream& out;
  std::ostream& err;
  std::unique_ptr<SimplicityOracle> oracle;

  SimplicityOracle& get_oracle() {
    if (!oracle) oracle = std::make_unique<SimplicityOracle>(OracleOptions{globals.oracle_budget});
    return *oracle;
  }

  CertifyOptions certify_options() {
    CertifyOptions o;
    o.oracle = &get_oracle();
    o.overlap_cap = globals.overlap_cap;
    o.k_bound = globals.k_bound;
    return o;
  }

  // Every word on one command line shares a rank: the override, else the
  // largest index used by any of them.
  std::vector<Word> parse(const std::vector<std::string>& texts) const {
    int rank = 1;
    if (globals.rank) {
      rank = *globals.rank;
    } else {
      for (const auto& t : texts) {
        try {
          rank = std::max(rank, max_index_in(t));
        } catch (const ParseError& e) {
          throw InputError("cannot parse '" + t + "' " + e.what());
        }
      }
    }
    std::vector<Word> words;
    for (const auto& t : texts) {
      try {
        words.push_back(parse_word(t, rank));
      } catch (const ParseError& e) {
        throw InputError("cannot parse '" + t + "' " + e.what());
      }
    }
    return words;
  }

  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

std::string overlap_text(const AxisOverlap& o) {
  return o.infinite ? "infinite" : std::to_string(o.vertex_count);
}

void print_trail(std::ostream& out, const Certificate& c) {
  const Trail& t = c.trail;
  const auto flag = [&out](const char* name, const std::optional<bool>& v) {
    if (v) out << "  " << name << ": " << (*v ? "true" : "false") << '\n';
  };
  out << "  w: " << to_string(t.pivot) << '\n';
  flag("non_simple_w", t.pivot_non_simple);
  flag("cyclically_reduced_w", t.pivot_cyclically_reduced);
  flag("minimal", t.minimal);
  if (t.overlap) {
    out << "  overlap: " << overlap_text(*t.overlap) << " vertices, "
        << (t.overlap->infinite ? std::string("infinite") : std::to_string(t.overlap->edge_length()))
        << " edges\n";
  }
  out << "  threshold: " << t.threshold << " edges\n";
  if (t.k) out << "  k: " << *t.k << '\n';
  flag("subgraph", t.subgraph);
  flag("cut_free_w", t.cut_free_w);
  flag("cut_free_ak", t.cut_free_ak);
  if (t.offset) out << "  offset: " << *t.offset << '\n';
  if (t.rotated) out << "  rotated: " << to_string(*t.rotated) << '\n';
  if (t.conjugator) out << "  conjugator: " << to_string(*t.conjugator) << '\n';
  if (t.failed) out << "  failed: " << *t.failed << '\n';
  if (t.note) out << "  note: " << *t.note << '\n';
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::kNonSimpleCertified: return kExitTrue;
    case Verdict::kHypothesisFailed: return kExitFalse;
    case Verdict::kUndecided: return kExitUndecided;
  }
  return kExitFalse;
}

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--rank", g.rank, "Rank of the free group (default: largest index used)")
      ->check(CLI::Range(1, WhiteheadGraph::kMaxRank));
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--oracle-budget", g.oracle_budget,
                 "Maximum cyclic words visited by one simplicity search")
      ->envname("FREECERT_ORACLE_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--overlap-cap", g.overlap_cap, "Axis scan window for overlap computations")
      ->envname("FREECERT_OVERLAP_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--k-bound", g.k_bound, "Largest |k| tried when searching Wh(w) inside Wh(a^k)")
      ->envname("FREECERT_K_BOUND")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{Globals{}, out, err, nullptr};
  CLI::App app{"Free group words, Whitehead graphs, axes and non-simplicity certificates", "freecert"};
  app.require_subcommand(1);
  app.fallthrough();
  add_globals(app, ctx.globals);

  std::function<int()> action;
  std::string word_a;
  std::string word_b;

  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  reduce->add_option("word", word_a)->required();
  reduce->callback([&] {
    action = [&] {
      const Word w = ctx.parse({word_a})[0];
      if (ctx.globals.json) {
        ctx.emit(Json{{"schema", kSchemaVersion}, {"rank", w.rank()}, {"word", to_string(w)},
                      {"length", w.size()}});
      } else {
        out << to_string(w) << '\n';
      }
      return kExitTrue;
    };
  });

  auto* cyc = app.add_subcommand("cyclic-reduce", "Split a word as conjugator * core * conjugator^-1");
  cyc->add_option("word", word_a)->required();
  cyc->callback([&] {
    action = [&] {
      const Word w = ctx.parse({word_a})[0];
      const CyclicReduction r = cyclic_reduce(w);
      if (ctx.globals.json) {
        ctx.emit(Json{{"schema", kSchemaVersion}, {"rank", w.rank()},
                      {"conjugator", to_string(r.conjugator)}, {"core", to_string(r.core.word())}});
      } else {
        out << "conjugator: " << to_string(r.conjugator) << '\n'
            << "core: " << to_string(r.core.word()) << '\n';
      }
      return kExitTrue;
    };
  });

  bool dot = false;
  auto* wh = app.add_subcommand("wh-graph", "Cyclic Whitehead graph of a word");
  wh->add_option("word", word_a)->required();
  wh->add_flag("--dot", dot, "Graphviz output");
  wh->callback([&] {
    action = [&] {
      const WhiteheadGraph g = build_whitehead_graph(ctx.parse({word_a})[0]);
      if (dot) {
        out << to_dot(g);
      } else if (ctx.globals.json) {
        ctx.emit(to_json(g));
      } else {
        for (const auto& [x, y] : named_edges(g)) out << x << " -- " << y << '\n';
      }
      return kExitTrue;
    };
  });

  auto* cuts = app.add_subcommand("cut-vertices", "Cut vertices of the Whitehead graph");
  cuts->add_option("word", word_a)->required();
  cuts->callback([&] {
    action = [&] {
      const auto vs = cut_vertices(build_whitehead_graph(ctx.parse({word_a})[0]));
      if (ctx.globals.json) {
        Json names = Json::array();
        for (Letter l : vs) names.push_back(vertex_name(l));
        ctx.emit(Json{{"schema", kSchemaVersion}, {"cut_vertices", std::move(names)}});
      } else {
        for (Letter l : vs) out << vertex_name(l) << '\n';
      }
      return kExitTrue;
    };
  });

  auto* simple = app.add_subcommand("is-simple", "Decide whether a word lies in a proper free factor");
  simple->add_option("word", word_a)->required();
  simple->callback([&] {
    action = [&] {
      const Word w = ctx.parse({word_a})[0];
      std::optional<bool> answer;
      try {
        answer = ctx.get_oracle().is_simple(w);
      } catch (const BudgetExceeded& e) {
        err << "undecided: " << e.what() << '\n';
      }
      if (ctx.globals.json) {
        Json j{{"schema", kSchemaVersion}, {"word", to_string(w)}};
        if (answer) {
          j["simple"] = *answer;
        } else {
          j["simple"] = "undecided";
        }
        ctx.emit(j);
      } else {
        out << (answer ? (*answer ? "true" : "false") : "undecided") << '\n';
      }
      if (!answer) return kExitUndecided;
      return *answer ? kExitTrue : kExitFalse;
    };
  });

  auto* minimize = app.add_subcommand("minimize", "Shorten the cyclic word by Whitehead moves");
  minimize->add_option("word", word_a)->required();
  minimize->callback([&] {
    action = [&] {
      const Word w = ctx.parse({word_a})[0];
      const Minimization m = whitehead_minimize(cyclic_reduce(w).core);
      if (ctx.globals.json) {
        Json moves = Json::array();
        for (const auto& move : m.trail) moves.push_back(move.describe());
        ctx.emit(Json{{"schema", kSchemaVersion}, {"input", to_string(w)},
                      {"minimal", to_string(m.minimal.word())}, {"length", m.minimal.size()},
                      {"moves", std::move(moves)}});
      } else {
        out << to_string(m.minimal.word()) << '\n';
        for (const auto& move : m.trail) out << "  " << move.describe() << '\n';
      }
      return kExitTrue;
    };
  });

  auto* ov = app.add_subcommand("axis-overlap", "Common vertices of the axes of two elements");
  ov->add_option("first", word_a, "First element g")->required();
  ov->add_option("second", word_b, "Second element h")->required();
  ov->callback([&] {
    action = [&] {
      const auto ws = ctx.parse({word_a, word_b});
      AxisOverlap o;
      try {
        o = overlap(ws[0], ws[1], ctx.globals.overlap_cap);
      } catch (const WindowExhausted& e) {
        err << "undecided: " << e.what() << '\n';
        if (ctx.globals.json) ctx.emit(Json{{"schema", kSchemaVersion}, {"overlap", "undecided"}});
        else out << "undecided\n";
        return kExitUndecided;
      }
      if (ctx.globals.json) {
        ctx.emit(to_json(o));
      } else {
        out << overlap_text(o) << '\n';
      }
      return kExitTrue;
    };
  });

  std::optional<std::string> pivot_text;
  std::string rule = "auto";
  auto* cert = app.add_subcommand("certify", "Certify that a word is not simple");
  cert->add_option("word", word_a)->required();
  cert->add_option("--pivot", pivot_text, "Pivot word w for the overlap theorem");
  cert->add_option("--rule", rule, "auto, theorem, squares, commutators or oracle")
      ->check(CLI::IsMember({"auto", "theorem", "squares", "commutators", "oracle"}));
  cert->callback([&] {
    action = [&] {
      std::vector<std::string> texts{word_a};
      if (pivot_text) texts.push_back(*pivot_text);
      const auto ws = ctx.parse(texts);
      const Word& a = ws[0];
      const CertifyOptions opts = ctx.certify_options();
      Certificate c;
      if (pivot_text && rule != "theorem" && rule != "auto") {
        throw InputError("--pivot only applies to --rule theorem");
      }
      if (rule == "theorem" || (rule == "auto" && pivot_text)) {
        c = certify_via_theorem(pivot_text ? ws[1] : squares_word(a.rank()), a, opts);
      } else if (rule == "squares") {
        c = certify_squares_subword(a, opts);
      } else if (rule == "commutators") {
        c = certify_commutator_subword(a, opts);
      } else if (rule == "oracle") {
        c = certify_with_oracle(a, opts);
      } else {
        c = certify_auto(a, opts);
      }
      if (ctx.globals.json) {
        ctx.emit(to_json(c));
      } else {
        out << to_string(c.verdict) << " " << to_string(c.rule) << '\n';
        print_trail(out, c);
      }
      return verdict_code(c.verdict);
    };
  });

  CorpusConfig corpus_config;
  std::string count_text = "1000";
  auto* corpus = app.add_subcommand("corpus", "Oracle and certificate statistics over random words");
  corpus->add_option("--length", corpus_config.length, "Word length")->check(CLI::PositiveNumber);
  corpus->add_option("--count", count_text, "Number of samples, or 'all' for every word");
  corpus->add_option("--seed", corpus_config.seed, "Random seed");
  corpus->add_option("--jobs", corpus_config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--limit", corpus_config.exhaustive_limit, "Largest exhaustive corpus");
  corpus->callback([&] {
    action = [&] {
      corpus_config.rank = ctx.globals.rank.value_or(2);
      if (count_text == "all") {
        corpus_config.count.reset();
      } else {
        try {
          std::size_t used = 0;
          corpus_config.count = std::stoull(count_text, &used);
          if (used != count_text.size()) throw std::invalid_argument(count_text);
        } catch (const std::exception&) {
          throw InputError("--count must be a number or 'all', got '" + count_text + "'");
        }
      }
      corpus_config.certify = ctx.certify_options();
      const CorpusStats stats = run_corpus(corpus_config);
      if (ctx.globals.json) {
        ctx.emit(to_json(stats));
      } else {
        out << "words: " << stats.words << (stats.exhaustive ? " (exhaustive)" : " (sampled)") << '\n'
            << "simple: " << stats.simple << '\n'
            << "non-simple: " << stats.non_simple << '\n'
            << "undecided: " << stats.undecided << '\n'
            << "certified COR_SQUARES: " << stats.certified_squares << '\n'
            << "certified COR_COMMUTATORS: " << stats.certified_commutators << '\n'
            << "certified THEOREM_OVERLAP: " << stats.certified_theorem << '\n'
            << "certified any: " << stats.certified_any << '\n'
            << "violations: " << stats.violations << '\n';
        for (const Word& w : stats.violation_examples) out << "  violation: " << to_string(w) << '\n';
      }
      return stats.violations == 0 ? kExitTrue : kExitFalse;
    };
  });

  PaperConfig paper_config;
  auto* paper = app.add_subcommand("verify-paper", "Regression checks for the builtin words and graph lemmas");
  paper->add_option("--seed", paper_config.seed, "Random seed");
  paper->add_option("--samples", paper_config.samples, "Random samples per property")
      ->check(CLI::PositiveNumber);
  paper->add_option("--exhaustive-length", paper_config.exhaustive_length,
                    "Length bound of the exhaustive rank-2 checks");
  paper->callback([&] {
    action = [&] {
      paper_config.rank = ctx.globals.rank.value_or(2);
      paper_config.oracle = &ctx.get_oracle();
      const Report report = verify_paper(paper_config);
      if (ctx.globals.json) {
        ctx.emit(to_json(report));
      } else {
        for (const Check& c : report.checks) {
          const char* status = c.status == CheckStatus::kPass   ? "PASS"
                               : c.status == CheckStatus::kFail ? "FAIL"
                                                                : "SKIP";
          out << status << " " << c.name;
          if (!c.detail.empty()) out << ": " << c.detail;
          out << '\n';
        }
        out << (report.ok() ? "all checks passed" : "some checks failed") << '\n';
      }
      return report.ok() ? kExitTrue : kExitFalse;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const WindowExhausted& e) {
    err << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace freecert
