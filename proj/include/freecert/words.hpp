#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freecert/error.hpp"

namespace freecert {

// Letters are packed as code = 2 * (index - 1) + inverted, which yields the
// order x1 < x1^-1 < x2 < x2^-1 < ... used for canonical rotations.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, bool inverted)
      : code_(2 * (index - 1) + (inverted ? 1 : 0)) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int index() const { return code_ / 2 + 1; }
  constexpr bool inverted() const { return (code_ & 1) != 0; }
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  int code_ = 0;
};

using Bigram = std::pair<Letter, Letter>;

/// Freely reduced word over x1..x_rank. Every constructor reduces, so a Word
/// never contains an adjacent pair x x^-1.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  /// Freely reduces `raw`. Throws InputError when a letter is outside the rank.
  Word(int rank, std::span<const Letter> raw);
  Word(int rank, std::initializer_list<Letter> raw);

  static Word generator(int rank, int index, bool inverted = false);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }

  bool is_cyclically_reduced() const {
    return letters_.size() <= 1 || letters_.front() != letters_.back().inverse();
  }

  /// Letters [pos, pos + n) as a word; the slice of a reduced word is reduced.
  Word slice(std::size_t pos, std::size_t n) const;

  bool operator==(const Word& other) const = default;
  auto operator<=>(const Word& other) const = default;

 private:
  struct Trusted {};
  Word(Trusted, int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {}
  friend Word invert(const Word&);
  friend class CyclicWord;

  int rank_ = 1;
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw, int rank);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
/// t u t^-1, reduced.
Word conjugate(const Word& u, const Word& t);
/// u^n for any integer n (u^0 is the identity).
Word power(const Word& u, long n);
/// [u, v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

/// Word considered up to rotation. The stored letters keep the rotation they
/// were built with; equality, ordering and hashing go through `canonical()`,
/// the lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(int rank) : word_(rank) {}
  /// Requires a cyclically reduced word; throws InputError otherwise.
  explicit CyclicWord(Word w);

  int rank() const { return word_.rank(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  const Word& word() const { return word_; }
  Word canonical() const;
  /// Rotation that starts at letter `offset` of the stored word.
  Word rotation(std::size_t offset) const;

  bool operator==(const CyclicWord& other) const;
  std::strong_ordering operator<=>(const CyclicWord& other) const;

 private:
  Word word_;
};

struct CyclicReduction {
  Word conjugator;
  CyclicWord core;
};

/// w = conjugator * core * conjugator^-1 with the conjugator as long as
/// possible. The empty word gives (1, 1).
CyclicReduction cyclic_reduce(const Word& w);

struct AbelianVector {
  std::vector<std::int64_t> coordinates;
  bool operator==(const AbelianVector&) const = default;
};

AbelianVector abelianize(const Word& w);
bool in_commutator_subgroup(const Word& w);
/// Membership in {x^2 y : y in [F, F]}, i.e. abelianization in (2Z)^r.
bool in_square_times_commutator(const Word& w);

std::set<Bigram> cyclic_bigrams(const CyclicWord& w);

/// Offset of the first rotation of `w` that starts with `pattern`, if any.
/// Patterns longer than the cyclic word never match.
std::optional<std::size_t> find_cyclic_subword(const CyclicWord& w,
                                               const Word& pattern);
bool contains_cyclic_subword(const CyclicWord& w, const Word& pattern);

/// Start index of the lexicographically least rotation.
std::size_t least_rotation(std::span<const Letter> letters);

/// Shortest q with letters = q^k, as a prefix length.
std::size_t primitive_period(std::span<const Letter> letters);

// Text syntax. Compact form: a..z are x1..x26 and A..Z their inverses.
// Verbose form: whitespace-separated tokens x<k> and x<k>^-1. Forms are
// auto-detected (any digit or '^' selects verbose). "1" and "" are the
// identity. Without an explicit rank the rank is the largest index used
// (at least 1).
Word parse_word(std::string_view text, std::optional<int> rank = std::nullopt);
/// Largest generator index referenced by `text`, 0 for the identity.
int max_index_in(std::string_view text);
std::string to_string(const Word& w);
std::string to_string(Letter l, int rank);
/// Vertex name used by graph output: x3 or x3' for the inverse.
std::string vertex_name(Letter l);

}  // namespace freecert

template <>
struct std::hash<freecert::Word> {
  std::size_t operator()(const freecert::Word& w) const noexcept;
};
