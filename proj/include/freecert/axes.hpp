#pragma once

#include <cstddef>
#include <optional>

#include "freecert/words.hpp"

namespace freecert {

/// Axis of a nontrivial element g = t c t^-1 (c cyclically reduced) acting on
/// the Cayley tree. Vertex i is t times the length-i prefix of c^infinity for
/// i >= 0, and t times the length-|i| prefix of (c^-1)^infinity for i < 0.
struct Axis {
  Word conjugator;
  Word core;

  int rank() const { return core.rank(); }
  std::size_t translation_length() const { return core.size(); }
  Word element() const { return conjugate(core, conjugator); }
};

/// Throws InputError for the identity.
Axis axis(const Word& g);
Word axis_vertex(const Axis& a, long i);
/// u lies on the axis of g iff u^-1 g u is cyclically reduced.
bool on_axis(const Word& u, const Word& g);
/// The two axes have the same vertex set. Decided by comparing the
/// generators t p t^-1 of the two line stabilisers, p the primitive root
/// of the core.
bool same_line(const Axis& a, const Axis& b);

struct AxisOverlap {
  bool infinite = false;
  /// Number of common vertices (meaningful when !infinite).
  std::size_t vertex_count = 0;
  std::optional<Word> endpoint_low;
  std::optional<Word> endpoint_high;

  /// Edges in the common segment: vertex_count - 1, or 0 when empty.
  std::size_t edge_length() const { return vertex_count == 0 ? 0 : vertex_count - 1; }
};

/// 4 (|g| + |h|) + 8.
std::size_t default_overlap_cap(const Word& g, const Word& h);

/// Common vertices of the axes of g and h. Scans vertices of the axis of h
/// with index in [-cap, cap] for one on the axis of g, then extends the
/// segment in both directions. If nothing is found and cap is below
/// |t_g| + |t_h| + |c_g| + |c_h| the result cannot be certified empty and
/// WindowExhausted is thrown.
AxisOverlap overlap(const Word& g, const Word& h, std::optional<std::size_t> cap = std::nullopt);

/// Smallest |k| in 1..bound (positive first) with Wh(w) a subgraph of
/// Wh(a^k). `w` must be cyclically reduced and `a` nontrivial. The default
/// bound is |w| + 2.
std::optional<long> find_k(const Word& w, const Word& a, std::optional<long> bound = std::nullopt);

}  // namespace freecert
