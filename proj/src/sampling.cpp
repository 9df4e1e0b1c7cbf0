#include "freecert/sampling.hpp"

#include <algorithm>
#include <vector>

namespace freecert {

namespace {

Letter next_letter(int rank, Letter previous, Rng& rng) {
  // 2r - 1 choices: skip the code of previous^-1.
  auto code = static_cast<int>(uniform_below(rng, static_cast<std::size_t>(2 * rank - 1)));
  if (code >= previous.inverse().code()) ++code;
  return Letter::from_code(code);
}

}  // namespace

Word random_reduced_word(int rank, std::size_t length, Rng& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(
          Letter::from_code(static_cast<int>(uniform_below(rng, static_cast<std::size_t>(2 * rank)))));
    } else {
      letters.push_back(next_letter(rank, letters.back(), rng));
    }
  }
  return Word(rank, letters);
}

Word random_cyclically_reduced_word(int rank, std::size_t length, Rng& rng) {
  if (length < 2) return random_reduced_word(rank, length, rng);
  Word prefix = random_reduced_word(rank, length - 1, rng);
  std::vector<Letter> letters(prefix.letters().begin(), prefix.letters().end());
  const Letter forbidden = letters.front().inverse();
  Letter last = next_letter(rank, letters.back(), rng);
  if (rank == 1) {
    last = letters.back();
  } else {
    while (last == forbidden) last = next_letter(rank, letters.back(), rng);
  }
  letters.push_back(last);
  return Word(rank, letters);
}

std::uint64_t count_cyclically_reduced(int rank, std::size_t length, std::uint64_t cap) {
  if (length == 0) return 1;
  // (2r-1)^n + 1 + (r-1)(1 + (-1)^n)
  const auto base = static_cast<unsigned __int128>(2 * rank - 1);
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    total *= base;
    if (total > cap) return cap + 1;
  }
  total += 1 + static_cast<unsigned __int128>(rank - 1) * (length % 2 == 0 ? 2 : 0);
  return total > cap ? cap + 1 : static_cast<std::uint64_t>(total);
}

void for_each_cyclically_reduced(int rank, std::size_t length,
                                 const std::function<void(const Word&)>& visit) {
  if (length == 0) {
    visit(Word(rank));
    return;
  }
  std::vector<Letter> letters(length);
  const int alphabet = 2 * rank;
  const auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == length) {
      if (length >= 2 && letters.front() == letters.back().inverse()) return;
      visit(Word(rank, letters));
      return;
    }
    for (int c = 0; c < alphabet; ++c) {
      const Letter l = Letter::from_code(c);
      if (pos > 0 && letters[pos - 1] == l.inverse()) continue;
      letters[pos] = l;
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
}

std::optional<Word> random_bigram_walk(const Word& v, std::size_t max_length, Rng& rng) {
  const CyclicWord core = cyclic_reduce(v).core;
  if (core.size() < 2 || max_length == 0) return std::nullopt;
  std::vector<std::vector<Letter>> successors(static_cast<std::size_t>(2 * v.rank()));
  const auto add = [&successors](const CyclicWord& c) {
    for (const auto& [x, y] : cyclic_bigrams(c)) {
      auto& list = successors[static_cast<std::size_t>(x.code())];
      if (std::find(list.begin(), list.end(), y) == list.end()) list.push_back(y);
    }
  };
  add(core);
  add(CyclicWord(invert(core.word())));
  for (auto& list : successors) std::sort(list.begin(), list.end());

  const Letter start = core.word()[uniform_below(rng, core.size())];
  std::vector<Letter> walk{start};
  while (walk.size() <= max_length) {
    const auto& next = successors[static_cast<std::size_t>(walk.back().code())];
    const Letter l = next[uniform_below(rng, next.size())];
    if (l == start) {
      // Closing here keeps every bigram, including the wrap-around one, in
      // the allowed set.
      if (walk.size() >= 2 || uniform_below(rng, 2) == 0) return Word(v.rank(), walk);
    }
    walk.push_back(l);
  }
  return std::nullopt;
}

}  // namespace freecert
