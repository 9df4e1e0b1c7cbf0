#include "freecert/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace freecert {

namespace {

void check_rank(int rank) {
  if (rank < 1) {
    throw InputError("rank must be at least 1, got " + std::to_string(rank));
  }
}

void require_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::span<const Letter> raw) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l.code() < 0 || l.index() > rank) {
      throw InputError("letter x" + std::to_string(l.index()) +
                       " is outside rank " + std::to_string(rank));
    }
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word::Word(int rank, std::initializer_list<Letter> raw)
    : Word(rank, std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::generator(int rank, int index, bool inverted) {
  const Letter l(index, inverted);
  return Word(rank, std::span<const Letter>(&l, 1));
}

Word Word::slice(std::size_t pos, std::size_t n) const {
  pos = std::min(pos, letters_.size());
  n = std::min(n, letters_.size() - pos);
  return Word(Trusted{}, rank_,
              std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + n));
}

Word reduce(std::span<const Letter> raw, int rank) { return Word(rank, raw); }

Word concat(const Word& u, const Word& v) {
  require_same_rank(u, v);
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word(u.rank(), raw);
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(Word::Trusted{}, u.rank(), std::move(out));
}

Word conjugate(const Word& u, const Word& t) {
  require_same_rank(u, t);
  return concat(concat(t, u), invert(t));
}

Word power(const Word& u, long n) {
  const Word base = n < 0 ? invert(u) : u;
  const long count = std::labs(n);
  // Cyclic reduction keeps the cost linear: t c^n t^-1 needs no cancellation
  // inside c^n.
  const CyclicReduction cr = cyclic_reduce(base);
  std::vector<Letter> raw(cr.conjugator.letters().begin(),
                          cr.conjugator.letters().end());
  const auto core = cr.core.word().letters();
  raw.reserve(raw.size() + core.size() * static_cast<std::size_t>(count) +
              cr.conjugator.size());
  for (long i = 0; i < count; ++i) raw.insert(raw.end(), core.begin(), core.end());
  const Word tail = invert(cr.conjugator);
  raw.insert(raw.end(), tail.letters().begin(), tail.letters().end());
  return Word(u.rank(), raw);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

CyclicWord::CyclicWord(Word w) : word_(std::move(w)) {
  if (!word_.is_cyclically_reduced()) {
    throw InputError("word " + to_string(word_) + " is not cyclically reduced");
  }
}

Word CyclicWord::canonical() const { return rotation(least_rotation(word_.letters())); }

Word CyclicWord::rotation(std::size_t offset) const {
  const auto letters = word_.letters();
  if (letters.empty()) return word_;
  offset %= letters.size();
  std::vector<Letter> out(letters.begin() + offset, letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + offset);
  return Word(Word::Trusted{}, word_.rank(), std::move(out));
}

bool CyclicWord::operator==(const CyclicWord& other) const {
  return rank() == other.rank() && size() == other.size() &&
         canonical() == other.canonical();
}

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& other) const {
  return canonical() <=> other.canonical();
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {w.slice(0, lo), CyclicWord(w.slice(lo, hi - lo))};
}

AbelianVector abelianize(const Word& w) {
  AbelianVector v{std::vector<std::int64_t>(static_cast<std::size_t>(w.rank()), 0)};
  for (Letter l : w.letters()) {
    v.coordinates[static_cast<std::size_t>(l.index() - 1)] += l.inverted() ? -1 : 1;
  }
  return v;
}

bool in_commutator_subgroup(const Word& w) {
  const auto v = abelianize(w);
  return std::all_of(v.coordinates.begin(), v.coordinates.end(),
                     [](std::int64_t c) { return c == 0; });
}

bool in_square_times_commutator(const Word& w) {
  const auto v = abelianize(w);
  return std::all_of(v.coordinates.begin(), v.coordinates.end(),
                     [](std::int64_t c) { return c % 2 == 0; });
}

std::set<Bigram> cyclic_bigrams(const CyclicWord& w) {
  std::set<Bigram> out;
  const auto letters = w.word().letters();
  if (letters.size() <= 1) return out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out.emplace(letters[i], letters[(i + 1) % letters.size()]);
  }
  return out;
}

std::optional<std::size_t> find_cyclic_subword(const CyclicWord& w,
                                               const Word& pattern) {
  const auto text = w.word().letters();
  const auto pat = pattern.letters();
  if (pat.empty()) return 0;
  if (pat.size() > text.size()) return std::nullopt;
  const std::size_t n = text.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t j = 0;
    while (j < pat.size() && text[(start + j) % n] == pat[j]) ++j;
    if (j == pat.size()) return start;
  }
  return std::nullopt;
}

bool contains_cyclic_subword(const CyclicWord& w, const Word& pattern) {
  return find_cyclic_subword(w, pattern).has_value();
}

std::size_t least_rotation(std::span<const Letter> s) {
  // Two-candidate scan; O(n) comparisons.
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

std::size_t primitive_period(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Prefix function: the smallest period is n - border, valid when it divides n.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  const std::size_t p = n - pi[n - 1];
  return n % p == 0 ? p : n;
}

}  // namespace freecert

std::size_t std::hash<freecert::Word>::operator()(
    const freecert::Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (freecert::Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(l.code()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
