#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecert/autos.hpp"
#include "freecert/axes.hpp"
#include "freecert/words.hpp"

namespace freecert {

// Builtin words over the standard basis.
/// x1^2 x2^2 ... xr^2
Word squares_word(int rank);
/// [x1,x2][x3,x4]...[x_{r-1},x_r]; throws InputError for odd rank.
Word commutator_word(int rank);
/// x1^k x2^k ... xr^k
Word power_word(int rank, long k);
/// The named collection: u, w_comm (even rank only), u1 = u x1,
/// u2 = w_comm x1 (even rank only) and a^2..a^3 power words.
std::vector<std::pair<std::string, Word>> builtin_words(int rank);

enum class Verdict { kNonSimpleCertified, kHypothesisFailed, kUndecided };
enum class Rule { kTheoremOverlap, kCorSquares, kCorCommutators, kOracle };

std::string to_string(Verdict v);
std::string to_string(Rule r);

/// Record of every hypothesis check behind a certificate. Optional fields are
/// absent when the pipeline stopped before reaching them.
struct Trail {
  Word pivot;
  std::optional<bool> pivot_non_simple;
  std::optional<bool> pivot_cyclically_reduced;
  std::optional<bool> minimal;
  std::optional<AxisOverlap> overlap;
  /// |w| + 1, compared against the edge length of the common segment.
  std::size_t threshold = 0;
  std::optional<long> k;
  std::optional<bool> subgraph;
  std::optional<bool> cut_free_w;
  std::optional<bool> cut_free_ak;
  /// Pattern rules: a = conjugator * rotated * conjugator^-1, where rotated
  /// is the rotation of a beginning with the pattern.
  std::optional<std::size_t> offset;
  std::optional<Word> rotated;
  std::optional<Word> conjugator;
  /// First check that did not pass, e.g. "H1", "H3", "pattern", "replay:k".
  std::optional<std::string> failed;
  std::optional<std::string> note;
};

struct Certificate {
  Word subject;
  Verdict verdict = Verdict::kHypothesisFailed;
  Rule rule = Rule::kTheoremOverlap;
  Trail trail;
};

struct CertifyOptions {
  SimplicityOracle* oracle = nullptr;  // default_oracle() when null
  std::optional<std::size_t> overlap_cap;
  std::optional<long> k_bound;
};

/// Sufficient condition for non-simplicity of `a` given a pivot `w`:
///   H1  w is not simple (orbit oracle)
///   H2  w is cyclically reduced and no Whitehead move shortens it
///   H3  the common segment of the axes of a and w has at least |w| + 1 edges
///       (an infinite overlap passes)
/// followed by a replay of the graph argument: a witness k with Wh(w) inside
/// Wh(a^k), and both graphs free of cut vertices.
/// Requires rank >= 2 and nontrivial w, a (InputError otherwise).
Certificate certify_via_theorem(const Word& w, const Word& a, const CertifyOptions& options = {});

/// Pattern rule with pivot x1^2...xr^2: a cyclically reduced word containing
/// x1^2...xr^2 x1 cyclically is not simple. `a` must be cyclically reduced
/// and nontrivial, rank >= 2.
Certificate certify_squares_subword(const Word& a, const CertifyOptions& options = {});
/// Same with the pivot [x1,x2]...[x_{2n-1},x_{2n}]; needs even rank.
Certificate certify_commutator_subword(const Word& a, const CertifyOptions& options = {});

/// Tries the pattern rules (when `a` is cyclically reduced) and then the
/// theorem with the builtin pivots; returns the first certificate issued, or
/// else the last failure (an undecided outcome takes precedence over a
/// failed one).
Certificate certify_auto(const Word& a, const CertifyOptions& options = {});

/// Independent oracle verdict packaged as a certificate (rule ORACLE).
Certificate certify_with_oracle(const Word& a, const CertifyOptions& options = {});

enum class CheckStatus { kPass, kFail, kSkip };

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  bool ok() const;
  void add(std::string name, bool passed, std::string detail = {});
  void skip(std::string name, std::string detail);
  void append(const Report& other);
};

/// Minimality (by exhausting Whitehead moves), abelianization membership and
/// cut-vertex freeness of the squares word and, for even rank, the
/// commutator word.
Report verify_prop_2_3(int rank);
/// The endomorphisms x1 -> u1^-1, x2 -> u1^2, xj -> 1 and xi -> u2 fix u1 and
/// u2, are not automorphisms (determinant 0) and u1, u2 are not simple.
Report verify_example_4_6(int rank, SimplicityOracle* oracle = nullptr);

}  // namespace freecert
