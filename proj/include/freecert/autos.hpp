#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "freecert/words.hpp"

namespace freecert {

/// Whitehead automorphism of F_r.
///
/// A relabeling sends each generator x_i to a letter (a signed permutation
/// of the basis). A multiplier move is given by a letter `a` and a set A of
/// letters with a in A and a^-1 not in A; every generator x other than a^{+-1}
/// is sent to
///   x        if x, x^-1 not in A
///   x a      if x in A only
///   a^-1 x   if x^-1 in A only
///   a^-1 x a if both are in A
/// and a is fixed.
class WhiteheadAutomorphism {
 public:
  enum class Kind { kRelabeling, kMultiplier };

  static WhiteheadAutomorphism relabeling(int rank, std::vector<Letter> images);
  /// `subset` is a bitmask over letter codes. Throws InputError unless it
  /// contains `a` and omits a^-1.
  static WhiteheadAutomorphism multiplier(int rank, Letter a, std::uint64_t subset);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  Letter multiplier_letter() const { return a_; }
  std::uint64_t subset() const { return subset_; }
  const std::vector<Letter>& relabel_images() const { return images_; }

  /// Image of a single letter, unreduced (at most three letters).
  void image_of(Letter l, std::vector<Letter>& out) const;
  Word apply(const Word& w) const;
  /// Image of a cyclic word, cyclically reduced.
  CyclicWord apply(const CyclicWord& w) const;
  /// Inverse move (also a Whitehead automorphism).
  WhiteheadAutomorphism inverse() const;

  std::string describe() const;

  bool operator==(const WhiteheadAutomorphism&) const = default;

 private:
  WhiteheadAutomorphism() = default;

  Kind kind_ = Kind::kRelabeling;
  int rank_ = 1;
  std::vector<Letter> images_;
  Letter a_;
  std::uint64_t subset_ = 0;
};

enum class RelabelingSet {
  kAll,         // every signed permutation (r! 2^r of them)
  kGenerators,  // identity, a transposition, an r-cycle and one inversion
};

/// Relabelings first, then multiplier moves ordered by the letter a and by
/// the subset bitmask. Rank 2 has 4 * 2^2 = 16 multiplier moves.
std::vector<WhiteheadAutomorphism> enumerate_whitehead_autos(
    int rank, RelabelingSet relabelings = RelabelingSet::kAll);

/// Calls `visit` on each multiplier move in enumeration order without
/// materialising the list; stops early when `visit` returns false.
void for_each_multiplier(int rank, const std::function<bool(const WhiteheadAutomorphism&)>& visit);

/// Largest rank for which exhaustive multiplier enumeration is attempted.
inline constexpr int kMaxEnumerationRank = 10;

/// Endomorphism of F_r given by the images of x1..xr.
class GeneratorMap {
 public:
  GeneratorMap(int rank, std::vector<Word> images);
  static GeneratorMap identity(int rank);
  static GeneratorMap from(const WhiteheadAutomorphism& move);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int index) const { return images_[static_cast<std::size_t>(index - 1)]; }

  /// this after other: x -> this(other(x)).
  GeneratorMap compose(const GeneratorMap& other) const;

 private:
  int rank_;
  std::vector<Word> images_;
};

Word apply_endo(const GeneratorMap& m, const Word& w);

/// Column i is abelianize(image of x_i).
using AbelianMatrix = std::vector<std::vector<std::int64_t>>;
AbelianMatrix abelian_matrix(const GeneratorMap& m);
std::int64_t determinant(const AbelianMatrix& m);
/// |det| == 1; necessary for m to be an automorphism.
bool is_possibly_automorphism(const GeneratorMap& m);

/// One line per generator: `x<i> -> <word>`. Missing generators map to
/// themselves.
GeneratorMap parse_generator_map(std::string_view text, int rank);
std::string to_string(const GeneratorMap& m);

struct Minimization {
  CyclicWord minimal;
  std::vector<WhiteheadAutomorphism> trail;
};

/// Steepest descent over multiplier moves until no move shortens the cyclic
/// word; ties go to the first move in enumeration order.
Minimization whitehead_minimize(const CyclicWord& w);
/// No multiplier move strictly shortens w.
bool is_whitehead_minimal(const CyclicWord& w);

struct OracleOptions {
  /// Cap on distinct canonical cyclic words visited by one orbit search.
  std::size_t max_visited = 1'000'000;
};

/// Decides whether a word lies in a proper free factor.
///
/// The word is minimised, then the set of minimal-length cyclic words
/// reachable through length-preserving multiplier moves is searched breadth
/// first; the word is simple iff some member omits a generator. Relabelings
/// are not needed as edges since they preserve omission. Results are
/// memoised per orbit, keyed by canonical form up to rotation, inversion and
/// relabeling (the search itself also works on these classes); the memo is
/// thread-safe. Exceeding the budget throws BudgetExceeded.
class SimplicityOracle {
 public:
  explicit SimplicityOracle(OracleOptions options = {});
  ~SimplicityOracle();
  SimplicityOracle(const SimplicityOracle&) = delete;
  SimplicityOracle& operator=(const SimplicityOracle&) = delete;

  bool is_simple(const Word& w);
  std::size_t memo_size() const;
  const OracleOptions& options() const { return options_; }

 private:
  struct Memo;
  OracleOptions options_;
  std::unique_ptr<Memo> memo_;
};

/// Shared oracle with the default budget.
SimplicityOracle& default_oracle();

bool is_simple(const Word& w);
/// Test elements for monomorphisms are exactly the non-simple elements.
bool is_test_element_for_monos(const Word& w);

}  // namespace freecert
