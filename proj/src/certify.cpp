#include "freecert/certify.hpp"

#include <algorithm>

#include "freecert/whgraph.hpp"

namespace freecert {

namespace {

void require_rank_at_least_two(int rank) {
  if (rank < 2) throw InputError("certification needs rank >= 2, got " + std::to_string(rank));
}

SimplicityOracle& oracle_of(const CertifyOptions& options) {
  return options.oracle != nullptr ? *options.oracle : default_oracle();
}

Certificate failed(Certificate c, std::string what) {
  c.verdict = Verdict::kHypothesisFailed;
  c.trail.failed = std::move(what);
  return c;
}

Certificate undecided(Certificate c, std::string what, std::string why) {
  c.verdict = Verdict::kUndecided;
  c.trail.failed = std::move(what);
  c.trail.note = std::move(why);
  return c;
}

Certificate certify_pattern(const Word& a, const Word& pivot, Rule rule,
                            const CertifyOptions& options) {
  if (a.empty()) throw InputError("pattern rules need a nontrivial word");
  if (!a.is_cyclically_reduced()) {
    throw InputError("pattern rules need a cyclically reduced word; pass the cyclic core of " +
                     to_string(a));
  }
  const Word pattern = concat(pivot, Word::generator(a.rank(), 1));
  const CyclicWord cyclic(a);
  const auto offset = find_cyclic_subword(cyclic, pattern);

  Certificate cert;
  cert.subject = a;
  cert.rule = rule;
  cert.trail.pivot = pivot;
  cert.trail.threshold = pivot.size() + 1;
  if (!offset) return failed(std::move(cert), "pattern");

  // a = a' (w x1 a'') with the rotation w x1 a'' a' cyclically reduced;
  // non-simplicity of the rotation transfers to its conjugate a.
  const Word rotated = cyclic.rotation(*offset);
  Certificate inner = certify_via_theorem(pivot, rotated, options);
  cert.verdict = inner.verdict;
  cert.trail = std::move(inner.trail);
  cert.trail.offset = *offset;
  cert.trail.rotated = rotated;
  cert.trail.conjugator = a.slice(0, *offset);
  if (cert.verdict == Verdict::kNonSimpleCertified &&
      conjugate(rotated, *cert.trail.conjugator) != a) {
    return failed(std::move(cert), "rotation");
  }
  return cert;
}

}  // namespace

Word squares_word(int rank) { return power_word(rank, 2); }

Word power_word(int rank, long k) {
  Word out(rank);
  for (int i = 1; i <= rank; ++i) out = concat(out, power(Word::generator(rank, i), k));
  return out;
}

Word commutator_word(int rank) {
  if (rank < 2 || rank % 2 != 0) {
    throw InputError("the commutator word needs an even rank >= 2, got " + std::to_string(rank));
  }
  Word out(rank);
  for (int i = 1; i < rank; i += 2) {
    out = concat(out, commutator(Word::generator(rank, i), Word::generator(rank, i + 1)));
  }
  return out;
}

std::vector<std::pair<std::string, Word>> builtin_words(int rank) {
  require_rank_at_least_two(rank);
  const Word x1 = Word::generator(rank, 1);
  std::vector<std::pair<std::string, Word>> out;
  out.emplace_back("u", squares_word(rank));
  if (rank % 2 == 0) out.emplace_back("w_comm", commutator_word(rank));
  out.emplace_back("u1", concat(squares_word(rank), x1));
  if (rank % 2 == 0) out.emplace_back("u2", concat(commutator_word(rank), x1));
  out.emplace_back("power3", power_word(rank, 3));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNonSimpleCertified: return "NON_SIMPLE_CERTIFIED";
    case Verdict::kHypothesisFailed: return "HYPOTHESIS_FAILED";
    case Verdict::kUndecided: return "UNDECIDED";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::kTheoremOverlap: return "THEOREM_OVERLAP";
    case Rule::kCorSquares: return "COR_SQUARES";
    case Rule::kCorCommutators: return "COR_COMMUTATORS";
    case Rule::kOracle: return "ORACLE";
  }
  return "?";
}

Certificate certify_via_theorem(const Word& w, const Word& a, const CertifyOptions& options) {
  if (w.rank() != a.rank()) throw RankMismatch(w.rank(), a.rank());
  require_rank_at_least_two(w.rank());
  if (w.empty() || a.empty()) throw InputError("pivot and subject must be nontrivial");

  Certificate cert;
  cert.subject = a;
  cert.rule = Rule::kTheoremOverlap;
  Trail& trail = cert.trail;
  trail.pivot = w;
  trail.threshold = w.size() + 1;

  try {
    trail.pivot_non_simple = !oracle_of(options).is_simple(w);
  } catch (const BudgetExceeded& e) {
    return undecided(std::move(cert), "H1", e.what());
  }
  if (!*trail.pivot_non_simple) return failed(std::move(cert), "H1");

  trail.pivot_cyclically_reduced = w.is_cyclically_reduced();
  if (!*trail.pivot_cyclically_reduced) {
    trail.minimal = false;
    return failed(std::move(cert), "H2");
  }
  try {
    trail.minimal = is_whitehead_minimal(CyclicWord(w));
  } catch (const BudgetExceeded& e) {
    return undecided(std::move(cert), "H2", e.what());
  }
  if (!*trail.minimal) return failed(std::move(cert), "H2");

  try {
    trail.overlap = overlap(a, w, options.overlap_cap);
  } catch (const WindowExhausted& e) {
    return undecided(std::move(cert), "H3", e.what());
  }
  if (!trail.overlap->infinite && trail.overlap->edge_length() < trail.threshold) {
    return failed(std::move(cert), "H3");
  }

  // Replay: Wh(w) sits inside Wh(a^k); Wh(w) has no cut vertex, hence
  // neither has Wh(a^k), so a^k and therefore a are not simple.
  trail.k = find_k(w, a, options.k_bound);
  if (!trail.k) return failed(std::move(cert), "replay:k");
  const WhiteheadGraph gw = build_whitehead_graph(w);
  const WhiteheadGraph gak = build_whitehead_graph(power(a, *trail.k));
  trail.subgraph = is_subgraph(gw, gak);
  trail.cut_free_w = !has_cut_vertex(gw);
  trail.cut_free_ak = !has_cut_vertex(gak);
  if (!*trail.subgraph) return failed(std::move(cert), "replay:subgraph");
  if (!*trail.cut_free_w) return failed(std::move(cert), "replay:cut_free_w");
  if (!*trail.cut_free_ak) return failed(std::move(cert), "replay:cut_free_ak");

  cert.verdict = Verdict::kNonSimpleCertified;
  return cert;
}

Certificate certify_squares_subword(const Word& a, const CertifyOptions& options) {
  require_rank_at_least_two(a.rank());
  return certify_pattern(a, squares_word(a.rank()), Rule::kCorSquares, options);
}

Certificate certify_commutator_subword(const Word& a, const CertifyOptions& options) {
  require_rank_at_least_two(a.rank());
  if (a.rank() % 2 != 0) {
    throw InputError("the commutator rule needs an even rank, got " + std::to_string(a.rank()));
  }
  return certify_pattern(a, commutator_word(a.rank()), Rule::kCorCommutators, options);
}

Certificate certify_auto(const Word& a, const CertifyOptions& options) {
  require_rank_at_least_two(a.rank());
  if (a.empty()) throw InputError("cannot certify the identity");
  const bool even = a.rank() % 2 == 0;
  std::vector<Certificate> attempts;
  const auto done = [&attempts] {
    return attempts.back().verdict == Verdict::kNonSimpleCertified;
  };

  if (a.is_cyclically_reduced()) {
    attempts.push_back(certify_squares_subword(a, options));
    if (done()) return attempts.back();
    if (even) {
      attempts.push_back(certify_commutator_subword(a, options));
      if (done()) return attempts.back();
    }
  }
  attempts.push_back(certify_via_theorem(squares_word(a.rank()), a, options));
  if (done()) return attempts.back();
  if (even) {
    attempts.push_back(certify_via_theorem(commutator_word(a.rank()), a, options));
    if (done()) return attempts.back();
  }
  for (const auto& c : attempts) {
    if (c.verdict == Verdict::kUndecided) return c;
  }
  return attempts.back();
}

Certificate certify_with_oracle(const Word& a, const CertifyOptions& options) {
  Certificate cert;
  cert.subject = a;
  cert.rule = Rule::kOracle;
  cert.trail.pivot = Word(a.rank());
  try {
    cert.verdict = oracle_of(options).is_simple(a) ? Verdict::kHypothesisFailed
                                                   : Verdict::kNonSimpleCertified;
    if (cert.verdict == Verdict::kHypothesisFailed) cert.trail.failed = "simple";
  } catch (const BudgetExceeded& e) {
    return undecided(std::move(cert), "oracle", e.what());
  }
  return cert;
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::kFail; });
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed ? CheckStatus::kPass : CheckStatus::kFail,
                    std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::kSkip, std::move(detail)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Report verify_prop_2_3(int rank) {
  require_rank_at_least_two(rank);
  Report report;
  const auto check_word = [&report](const std::string& name, const Word& w) {
    const CyclicWord cw(w);
    const bool minimal = is_whitehead_minimal(cw);
    report.add(name + ".minimal", minimal, "no Whitehead move shortens " + to_string(w));
    const std::size_t reached = whitehead_minimize(cw).minimal.size();
    report.add(name + ".length", reached == w.size(),
               "length " + std::to_string(w.size()) + ", minimized " + std::to_string(reached));
    report.add(name + ".cut_free", !has_cut_vertex(build_whitehead_graph(w)),
               "Whitehead graph has no cut vertex");
  };

  const Word u = squares_word(rank);
  check_word("builtin.u", u);
  report.add("builtin.u.square_times_commutator", in_square_times_commutator(u),
             "abelianization in (2Z)^r");
  if (rank % 2 == 0) {
    const Word w = commutator_word(rank);
    check_word("builtin.w_comm", w);
    report.add("builtin.w_comm.commutator_subgroup", in_commutator_subgroup(w),
               "abelianization is zero");
  } else {
    report.skip("builtin.w_comm", "commutator word needs even rank");
  }
  return report;
}

Report verify_example_4_6(int rank, SimplicityOracle* oracle) {
  require_rank_at_least_two(rank);
  SimplicityOracle& o = oracle != nullptr ? *oracle : default_oracle();
  Report report;
  const Word x1 = Word::generator(rank, 1);

  const auto check = [&](const std::string& name, const Word& u, const GeneratorMap& phi) {
    report.add(name + ".fixed", apply_endo(phi, u) == u, "phi(" + to_string(u) + ") = itself");
    const auto det = determinant(abelian_matrix(phi));
    report.add(name + ".not_automorphism", det == 0 && !is_possibly_automorphism(phi),
               "abelian determinant " + std::to_string(det));
    try {
      report.add(name + ".non_simple", !o.is_simple(u), "orbit oracle");
    } catch (const BudgetExceeded& e) {
      report.add(name + ".non_simple", false, std::string("undecided: ") + e.what());
    }
  };

  const Word u1 = concat(squares_word(rank), x1);
  std::vector<Word> images1(static_cast<std::size_t>(rank), Word(rank));
  images1[0] = invert(u1);
  images1[1] = power(u1, 2);
  check("endo.u1", u1, GeneratorMap(rank, std::move(images1)));

  if (rank % 2 == 0) {
    const Word u2 = concat(commutator_word(rank), x1);
    check("endo.u2", u2,
          GeneratorMap(rank, std::vector<Word>(static_cast<std::size_t>(rank), u2)));
  } else {
    report.skip("endo.u2", "commutator word needs even rank");
  }
  return report;
}

}  // namespace freecert
