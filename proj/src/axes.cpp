#include "freecert/axes.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "freecert/whgraph.hpp"

namespace freecert {

Axis axis(const Word& g) {
  if (g.empty()) throw InputError("the identity has no axis");
  auto cr = cyclic_reduce(g);
  return Axis{std::move(cr.conjugator), cr.core.word()};
}

Word axis_vertex(const Axis& a, long i) {
  std::vector<Letter> raw(a.conjugator.letters().begin(), a.conjugator.letters().end());
  const Word step = i >= 0 ? a.core : invert(a.core);
  const auto count = static_cast<std::size_t>(std::labs(i));
  raw.reserve(raw.size() + count);
  for (std::size_t j = 0; j < count; ++j) raw.push_back(step[j % step.size()]);
  return Word(a.rank(), raw);
}

bool on_axis(const Word& u, const Word& g) {
  if (g.empty()) throw InputError("the identity has no axis");
  return conjugate(g, invert(u)).is_cyclically_reduced();
}

bool same_line(const Axis& a, const Axis& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
  const std::size_t pa = primitive_period(a.core.letters());
  const std::size_t pb = primitive_period(b.core.letters());
  if (pa != pb) return false;
  const Word root_a = conjugate(a.core.slice(0, pa), a.conjugator);
  const Word root_b = conjugate(b.core.slice(0, pb), b.conjugator);
  return root_a == root_b || root_a == invert(root_b);
}

std::size_t default_overlap_cap(const Word& g, const Word& h) {
  return 4 * (g.size() + h.size()) + 8;
}

AxisOverlap overlap(const Word& g, const Word& h, std::optional<std::size_t> cap) {
  if (g.rank() != h.rank()) throw RankMismatch(g.rank(), h.rank());
  const Axis ag = axis(g);
  const Axis ah = axis(h);
  AxisOverlap result;
  if (same_line(ag, ah)) {
    result.infinite = true;
    return result;
  }
  const std::size_t window = ag.conjugator.size() + ah.conjugator.size() +
                             ag.core.size() + ah.core.size();
  const std::size_t limit = cap.value_or(default_overlap_cap(g, h));

  std::optional<long> hit;
  for (std::size_t d = 0; d <= limit && !hit; ++d) {
    const long i = static_cast<long>(d);
    if (on_axis(axis_vertex(ah, i), g)) {
      hit = i;
    } else if (d > 0 && on_axis(axis_vertex(ah, -i), g)) {
      hit = -i;
    }
  }
  if (!hit) {
    if (limit < window) {
      throw WindowExhausted("no common vertex within index window " + std::to_string(limit) +
                            "; emptiness needs at least " + std::to_string(window));
    }
    return result;
  }

  // Distinct lines in a tree meet in a finite segment; the guard only
  // protects against a broken invariant.
  const long guard = static_cast<long>(limit + window + 4 * (g.size() + h.size()) + 8);
  long lo = *hit;
  long hi = *hit;
  while (on_axis(axis_vertex(ah, hi + 1), g)) {
    if (++hi - *hit > guard) throw std::logic_error("axis overlap did not terminate");
  }
  while (on_axis(axis_vertex(ah, lo - 1), g)) {
    if (*hit - --lo > guard) throw std::logic_error("axis overlap did not terminate");
  }
  result.vertex_count = static_cast<std::size_t>(hi - lo + 1);
  result.endpoint_low = axis_vertex(ah, lo);
  result.endpoint_high = axis_vertex(ah, hi);
  return result;
}

std::optional<long> find_k(const Word& w, const Word& a, std::optional<long> bound) {
  if (w.rank() != a.rank()) throw RankMismatch(w.rank(), a.rank());
  if (!w.is_cyclically_reduced()) throw InputError("find_k needs a cyclically reduced w");
  if (a.empty()) throw InputError("find_k needs a nontrivial a");
  const long limit = bound.value_or(static_cast<long>(w.size()) + 2);
  const WhiteheadGraph target = build_whitehead_graph(w);
  for (long k = 1; k <= limit; ++k) {
    for (long signed_k : {k, -k}) {
      if (is_subgraph(target, build_whitehead_graph(power(a, signed_k)))) return signed_k;
    }
  }
  return std::nullopt;
}

}  // namespace freecert
