#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "freecert/words.hpp"

namespace freecert {

using Rng = std::mt19937_64;

/// Uniform in [0, n). Plain modulo so that a seed gives the same stream on
/// every standard library.
inline std::size_t uniform_below(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

/// Freely reduced word of exactly `length` letters: first letter uniform,
/// then uniform over the 2r - 1 letters that do not cancel.
Word random_reduced_word(int rank, std::size_t length, Rng& rng);

/// Cyclically reduced word of exactly `length` letters, built as above with
/// the final letter resampled until it also avoids the inverse of the first.
Word random_cyclically_reduced_word(int rank, std::size_t length, Rng& rng);

/// Number of cyclically reduced words of the given length, saturating at
/// `cap` + 1.
std::uint64_t count_cyclically_reduced(int rank, std::size_t length, std::uint64_t cap);

/// Visits every cyclically reduced word of exactly `length` letters in
/// lexicographic letter order.
void for_each_cyclically_reduced(int rank, std::size_t length,
                                 const std::function<void(const Word&)>& visit);

/// Random closed walk through the cyclic bigrams of v and v^-1, i.e. a
/// cyclically reduced word all of whose cyclic bigrams occur in v or v^-1.
/// Returns nullopt if no walk of at most `max_length` letters closes.
std::optional<Word> random_bigram_walk(const Word& v, std::size_t max_length, Rng& rng);

}  // namespace freecert
