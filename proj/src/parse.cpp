#include <cctype>
#include <charconv>
#include <vector>

#include "freecert/words.hpp"

namespace freecert {

namespace {

constexpr int kCompactLimit = 26;

bool is_verbose(std::string_view text) {
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '^') return true;
  }
  return false;
}

struct Parsed {
  std::vector<Letter> letters;
  int max_index = 0;
};

Parsed parse_compact(std::string_view text) {
  Parsed out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c >= 'a' && c <= 'z') {
      out.letters.emplace_back(c - 'a' + 1, false);
    } else if (c >= 'A' && c <= 'Z') {
      out.letters.emplace_back(c - 'A' + 1, true);
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.max_index = std::max(out.max_index, out.letters.back().index());
  }
  return out;
}

Parsed parse_verbose(std::string_view text) {
  Parsed out;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] == '1' &&
        (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;  // explicit identity token
      skip_space();
      continue;
    }
    if (text[i] != 'x') throw ParseError(i, "expected token x<k> or x<k>^-1");
    ++i;
    int index = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), index);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw ParseError(i, "expected generator index after 'x'");
    }
    if (index < 1) throw ParseError(i, "generator index must be positive");
    i = static_cast<std::size_t>(ptr - text.data());
    bool inverted = false;
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) != "^-1") throw ParseError(i, "only the exponent ^-1 is allowed");
      inverted = true;
      i += 3;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError(i, "tokens must be separated by whitespace");
    }
    out.letters.emplace_back(index, inverted);
    out.max_index = std::max(out.max_index, index);
    skip_space();
  }
  return out;
}

Parsed parse_any(std::string_view text) {
  return is_verbose(text) ? parse_verbose(text) : parse_compact(text);
}

}  // namespace

int max_index_in(std::string_view text) { return parse_any(text).max_index; }

Word parse_word(std::string_view text, std::optional<int> rank) {
  const Parsed p = parse_any(text);
  const int r = rank.value_or(std::max(1, p.max_index));
  if (r < 1) throw InputError("rank must be at least 1");
  if (p.max_index > r) {
    throw InputError("word uses x" + std::to_string(p.max_index) +
                     " but rank is " + std::to_string(r));
  }
  return Word(r, p.letters);
}

std::string to_string(Letter l, int rank) {
  if (rank <= kCompactLimit) {
    return std::string(1, static_cast<char>((l.inverted() ? 'A' : 'a') + l.index() - 1));
  }
  return "x" + std::to_string(l.index()) + (l.inverted() ? "^-1" : "");
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.rank() > kCompactLimit && i > 0) out += ' ';
    out += to_string(w[i], w.rank());
  }
  return out;
}

std::string vertex_name(Letter l) {
  return "x" + std::to_string(l.index()) + (l.inverted() ? "'" : "");
}

}  // namespace freecert
