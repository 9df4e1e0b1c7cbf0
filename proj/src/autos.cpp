#include "freecert/autos.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace freecert {

namespace {

bool in_subset(std::uint64_t subset, Letter l) { return (subset >> l.code()) & 1U; }

// Appends letters to a stack, cancelling against its top.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == l.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

// Image of a cyclic word, freely and then cyclically reduced, written to
// `out` as [lo, hi).
std::pair<std::size_t, std::size_t> cyclic_image(const WhiteheadAutomorphism& move,
                                                 std::span<const Letter> letters,
                                                 std::vector<Letter>& out,
                                                 std::vector<Letter>& scratch) {
  out.clear();
  for (Letter l : letters) {
    scratch.clear();
    move.image_of(l, scratch);
    for (Letter x : scratch) push_reduced(out, x);
  }
  std::size_t lo = 0;
  std::size_t hi = out.size();
  while (hi - lo >= 2 && out[lo] == out[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {lo, hi};
}

void check_enumerable(int rank) {
  if (rank < 1 || rank > kMaxEnumerationRank) {
    throw BudgetExceeded("Whitehead move enumeration is limited to ranks 1.." +
                         std::to_string(kMaxEnumerationRank) + ", got " +
                         std::to_string(rank));
  }
}

}  // namespace

WhiteheadAutomorphism WhiteheadAutomorphism::relabeling(int rank, std::vector<Letter> images) {
  if (static_cast<int>(images.size()) != rank) {
    throw InputError("relabeling needs one image per generator");
  }
  std::vector<bool> hit(static_cast<std::size_t>(rank) + 1, false);
  for (Letter l : images) {
    if (l.index() < 1 || l.index() > rank || hit[static_cast<std::size_t>(l.index())]) {
      throw InputError("relabeling images must be a signed permutation of the basis");
    }
    hit[static_cast<std::size_t>(l.index())] = true;
  }
  WhiteheadAutomorphism m;
  m.kind_ = Kind::kRelabeling;
  m.rank_ = rank;
  m.images_ = std::move(images);
  return m;
}

WhiteheadAutomorphism WhiteheadAutomorphism::multiplier(int rank, Letter a, std::uint64_t subset) {
  if (rank < 1 || rank > 32 || a.index() > rank) throw InputError("multiplier letter outside rank");
  if (!in_subset(subset, a) || in_subset(subset, a.inverse())) {
    throw InputError("multiplier set must contain a and omit a^-1");
  }
  if (rank < 32 && (subset >> (2 * rank)) != 0) throw InputError("multiplier set outside rank");
  WhiteheadAutomorphism m;
  m.kind_ = Kind::kMultiplier;
  m.rank_ = rank;
  m.a_ = a;
  m.subset_ = subset;
  return m;
}

void WhiteheadAutomorphism::image_of(Letter l, std::vector<Letter>& out) const {
  if (kind_ == Kind::kRelabeling) {
    const Letter img = images_[static_cast<std::size_t>(l.index() - 1)];
    out.push_back(l.inverted() ? img.inverse() : img);
    return;
  }
  if (l.index() == a_.index()) {
    out.push_back(l);
    return;
  }
  if (in_subset(subset_, l.inverse())) out.push_back(a_.inverse());
  out.push_back(l);
  if (in_subset(subset_, l)) out.push_back(a_);
}

Word WhiteheadAutomorphism::apply(const Word& w) const {
  if (w.rank() != rank_) throw RankMismatch(w.rank(), rank_);
  std::vector<Letter> raw;
  raw.reserve(3 * w.size());
  for (Letter l : w.letters()) image_of(l, raw);
  return Word(rank_, raw);
}

CyclicWord WhiteheadAutomorphism::apply(const CyclicWord& w) const {
  if (w.rank() != rank_) throw RankMismatch(w.rank(), rank_);
  std::vector<Letter> out;
  std::vector<Letter> scratch;
  const auto [lo, hi] = cyclic_image(*this, w.word().letters(), out, scratch);
  return CyclicWord(Word(rank_, std::span<const Letter>(out.data() + lo, hi - lo)));
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverse() const {
  if (kind_ == Kind::kRelabeling) {
    std::vector<Letter> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      const Letter img = images_[i];
      inv[static_cast<std::size_t>(img.index() - 1)] =
          Letter(static_cast<int>(i) + 1, img.inverted());
    }
    return relabeling(rank_, std::move(inv));
  }
  const std::uint64_t flipped = (subset_ & ~(std::uint64_t{1} << a_.code())) |
                                (std::uint64_t{1} << a_.inverse().code());
  return multiplier(rank_, a_.inverse(), flipped);
}

std::string WhiteheadAutomorphism::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::kRelabeling) {
    os << "relabel(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0) os << ", ";
      os << "x" << i + 1 << "->" << to_string(Word(rank_, {images_[i]}));
    }
    os << ")";
    return os.str();
  }
  os << "multiplier(a=" << to_string(Word(rank_, {a_})) << ", A={";
  bool first = true;
  for (int c = 0; c < 2 * rank_; ++c) {
    if (!in_subset(subset_, Letter::from_code(c))) continue;
    if (!first) os << ",";
    first = false;
    os << to_string(Word(rank_, {Letter::from_code(c)}));
  }
  os << "})";
  return os.str();
}

void for_each_multiplier(int rank,
                         const std::function<bool(const WhiteheadAutomorphism&)>& visit) {
  check_enumerable(rank);
  const int letters = 2 * rank;
  std::vector<int> others;
  for (int ac = 0; ac < letters; ++ac) {
    const Letter a = Letter::from_code(ac);
    others.clear();
    for (int c = 0; c < letters; ++c) {
      if (c != ac && c != (ac ^ 1)) others.push_back(c);
    }
    const std::uint64_t count = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::uint64_t subset = std::uint64_t{1} << ac;
      for (std::size_t bit = 0; bit < others.size(); ++bit) {
        if ((mask >> bit) & 1U) subset |= std::uint64_t{1} << others[bit];
      }
      if (!visit(WhiteheadAutomorphism::multiplier(rank, a, subset))) return;
    }
  }
}

std::vector<WhiteheadAutomorphism> enumerate_whitehead_autos(int rank, RelabelingSet relabelings) {
  check_enumerable(rank);
  std::vector<WhiteheadAutomorphism> out;
  const auto identity_images = [rank] {
    std::vector<Letter> v;
    for (int i = 1; i <= rank; ++i) v.emplace_back(i, false);
    return v;
  };

  if (relabelings == RelabelingSet::kAll) {
    if (rank > 6) throw BudgetExceeded("listing every relabeling is limited to rank 6");
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      for (unsigned signs = 0; signs < (1U << rank); ++signs) {
        std::vector<Letter> images;
        for (int i = 0; i < rank; ++i) {
          images.emplace_back(perm[static_cast<std::size_t>(i)], ((signs >> i) & 1U) != 0);
        }
        out.push_back(WhiteheadAutomorphism::relabeling(rank, std::move(images)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    out.push_back(WhiteheadAutomorphism::relabeling(rank, identity_images()));
    if (rank >= 2) {
      auto swap = identity_images();
      std::swap(swap[0], swap[1]);
      out.push_back(WhiteheadAutomorphism::relabeling(rank, std::move(swap)));
    }
    if (rank >= 3) {
      std::vector<Letter> cycle;
      for (int i = 1; i <= rank; ++i) cycle.emplace_back(i % rank + 1, false);
      out.push_back(WhiteheadAutomorphism::relabeling(rank, std::move(cycle)));
    }
    auto flip = identity_images();
    flip[0] = flip[0].inverse();
    out.push_back(WhiteheadAutomorphism::relabeling(rank, std::move(flip)));
  }

  for_each_multiplier(rank, [&out](const WhiteheadAutomorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

GeneratorMap::GeneratorMap(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank) {
    throw InputError("generator map needs " + std::to_string(rank) + " images");
  }
  for (const Word& w : images_) {
    if (w.rank() != rank) throw RankMismatch(w.rank(), rank);
  }
}

GeneratorMap GeneratorMap::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return GeneratorMap(rank, std::move(images));
}

GeneratorMap GeneratorMap::from(const WhiteheadAutomorphism& move) {
  std::vector<Word> images;
  for (int i = 1; i <= move.rank(); ++i) {
    images.push_back(move.apply(Word::generator(move.rank(), i)));
  }
  return GeneratorMap(move.rank(), std::move(images));
}

GeneratorMap GeneratorMap::compose(const GeneratorMap& other) const {
  if (other.rank() != rank_) throw RankMismatch(other.rank(), rank_);
  std::vector<Word> images;
  for (const Word& w : other.images()) images.push_back(apply_endo(*this, w));
  return GeneratorMap(rank_, std::move(images));
}

Word apply_endo(const GeneratorMap& m, const Word& w) {
  if (w.rank() != m.rank()) throw RankMismatch(w.rank(), m.rank());
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const auto img = m.image(l.index()).letters();
    if (l.inverted()) {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, it->inverse());
    } else {
      for (Letter x : img) push_reduced(out, x);
    }
  }
  return Word(m.rank(), out);
}

AbelianMatrix abelian_matrix(const GeneratorMap& m) {
  const auto r = static_cast<std::size_t>(m.rank());
  AbelianMatrix mat(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t col = 0; col < r; ++col) {
    const auto v = abelianize(m.images()[col]);
    for (std::size_t row = 0; row < r; ++row) mat[row][col] = v.coordinates[row];
  }
  return mat;
}

std::int64_t determinant(const AbelianMatrix& input) {
  // Fraction-free (Bareiss) elimination; every division is exact.
  const std::size_t n = input.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

bool is_possibly_automorphism(const GeneratorMap& m) {
  const auto det = determinant(abelian_matrix(m));
  return det == 1 || det == -1;
}

GeneratorMap parse_generator_map(std::string_view text, int rank) {
  GeneratorMap base = GeneratorMap::identity(rank);
  std::vector<Word> images = base.images();
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size() || line[first] == '#') {
      if (line_end == text.size()) break;
      continue;
    }
    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(offset + first, "expected 'x<i> -> <word>'");
    std::string_view lhs = line.substr(first, arrow - first);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.remove_suffix(1);
    if (lhs.size() < 2 || lhs[0] != 'x') throw ParseError(offset + first, "expected generator x<i>");
    int index = 0;
    for (std::size_t i = 1; i < lhs.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(lhs[i]))) {
        throw ParseError(offset + first + i, "expected generator index");
      }
      index = index * 10 + (lhs[i] - '0');
      if (index > 1000) throw ParseError(offset + first + i, "generator index too large");
    }
    if (index < 1 || index > rank) {
      throw ParseError(offset + first, "generator x" + std::to_string(index) + " outside rank");
    }
    try {
      images[static_cast<std::size_t>(index - 1)] = parse_word(line.substr(arrow + 2), rank);
    } catch (const ParseError& e) {
      throw ParseError(offset + arrow + 2 + e.position(), e.what());
    }
    if (line_end == text.size()) break;
  }
  return GeneratorMap(rank, std::move(images));
}

std::string to_string(const GeneratorMap& m) {
  std::string out;
  for (int i = 1; i <= m.rank(); ++i) {
    out += "x" + std::to_string(i) + " -> " + to_string(m.image(i)) + "\n";
  }
  return out;
}

Minimization whitehead_minimize(const CyclicWord& w) {
  Minimization result{w, {}};
  std::vector<Letter> out;
  std::vector<Letter> scratch;
  while (true) {
    const std::size_t current = result.minimal.size();
    std::size_t best = current;
    std::optional<WhiteheadAutomorphism> best_move;
    for_each_multiplier(w.rank(), [&](const WhiteheadAutomorphism& move) {
      const auto [lo, hi] = cyclic_image(move, result.minimal.word().letters(), out, scratch);
      if (hi - lo < best) {
        best = hi - lo;
        best_move = move;
      }
      return true;
    });
    if (!best_move) return result;
    result.minimal = best_move->apply(result.minimal);
    result.trail.push_back(*best_move);
  }
}

bool is_whitehead_minimal(const CyclicWord& w) {
  if (w.empty()) return true;
  bool minimal = true;
  std::vector<Letter> out;
  std::vector<Letter> scratch;
  for_each_multiplier(w.rank(), [&](const WhiteheadAutomorphism& move) {
    const auto [lo, hi] = cyclic_image(move, w.word().letters(), out, scratch);
    if (hi - lo < w.size()) minimal = false;
    return minimal;
  });
  return minimal;
}

namespace {

// Canonical key of a cyclic word up to rotation, inversion and relabeling,
// with the rank in the first byte. Each rotation of w and w^-1 is relabeled
// by first appearance (first new generator becomes x1, read positively) and
// the least result is kept. Relabelings preserve omission and conjugate
// multiplier moves to multiplier moves, so the orbit search can work on
// these classes.
std::string orbit_key(int rank, std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::string best(1, static_cast<char>(rank));
  std::string key;
  std::vector<int> image(static_cast<std::size_t>(rank) + 1);
  std::vector<bool> flip(static_cast<std::size_t>(rank) + 1);
  const auto scan = [&](std::span<const Letter> s) {
    for (std::size_t start = 0; start < n; ++start) {
      std::fill(image.begin(), image.end(), 0);
      int next = 0;
      key.assign(1, static_cast<char>(rank));
      for (std::size_t i = 0; i < n; ++i) {
        const Letter l = s[(start + i) % n];
        const auto idx = static_cast<std::size_t>(l.index());
        if (image[idx] == 0) {
          image[idx] = ++next;
          flip[idx] = l.inverted();
        }
        key.push_back(static_cast<char>(Letter(image[idx], l.inverted() != flip[idx]).code()));
      }
      if (best.size() == 1 || key < best) best = key;
    }
  };
  std::vector<Letter> inv(letters.rbegin(), letters.rend());
  for (Letter& l : inv) l = l.inverse();
  scan(letters);
  scan(inv);
  return best;
}

bool omits_generator(int rank, std::span<const Letter> letters) {
  std::uint64_t used = 0;
  for (Letter l : letters) used |= std::uint64_t{1} << (l.index() - 1);
  return std::popcount(used) < rank;
}

}  // namespace

struct SimplicityOracle::Memo {
  mutable std::mutex mutex;
  std::unordered_map<std::string, bool> answers;
};

SimplicityOracle::SimplicityOracle(OracleOptions options)
    : options_(options), memo_(std::make_unique<Memo>()) {}

SimplicityOracle::~SimplicityOracle() = default;

std::size_t SimplicityOracle::memo_size() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->answers.size();
}

bool SimplicityOracle::is_simple(const Word& w) {
  if (w.empty()) return true;
  const CyclicWord core = cyclic_reduce(w).core;
  const int rank = w.rank();
  const std::string input_key = orbit_key(rank, core.word().letters());
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->answers.find(input_key); it != memo_->answers.end()) return it->second;
  }

  const CyclicWord start = whitehead_minimize(core).minimal;
  const std::size_t length = start.size();

  std::unordered_set<std::string> visited;
  std::deque<Word> queue;
  visited.insert(orbit_key(rank, start.word().letters()));
  queue.push_back(start.word());

  std::optional<bool> answer;
  std::vector<Letter> out;
  std::vector<Letter> scratch;
  while (!queue.empty() && !answer) {
    const Word current = std::move(queue.front());
    queue.pop_front();
    {
      std::lock_guard lock(memo_->mutex);
      // Everything reached here shares the input's orbit.
      if (auto it = memo_->answers.find(orbit_key(rank, current.letters()));
          it != memo_->answers.end()) {
        answer = it->second;
        break;
      }
    }
    if (omits_generator(rank, current.letters())) {
      answer = true;
      break;
    }
    for_each_multiplier(rank, [&](const WhiteheadAutomorphism& move) {
      const auto [lo, hi] = cyclic_image(move, current.letters(), out, scratch);
      if (hi - lo != length) {
        if (hi - lo < length) throw std::logic_error("orbit search met a shorter word");
        return true;
      }
      const std::span<const Letter> image(out.data() + lo, hi - lo);
      if (visited.insert(orbit_key(rank, image)).second) {
        if (visited.size() > options_.max_visited) {
          throw BudgetExceeded("orbit search for " + to_string(w) + " exceeded " +
                               std::to_string(options_.max_visited) + " visited words");
        }
        queue.emplace_back(rank, image);
      }
      return true;
    });
  }
  if (!answer) answer = false;

  std::lock_guard lock(memo_->mutex);
  memo_->answers[input_key] = *answer;
  for (const auto& key : visited) memo_->answers.emplace(key, *answer);
  return *answer;
}

SimplicityOracle& default_oracle() {
  static SimplicityOracle oracle;
  return oracle;
}

bool is_simple(const Word& w) { return default_oracle().is_simple(w); }

bool is_test_element_for_monos(const Word& w) { return !is_simple(w); }

}  // namespace freecert
