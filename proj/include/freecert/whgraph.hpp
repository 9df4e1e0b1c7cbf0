#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "freecert/words.hpp"

namespace freecert {

/// Simple graph on the 2r letters x1, x1^-1, ..., xr, xr^-1. Vertex v is the
/// letter with code v; adjacency is a bitmask, so rank is limited to 32.
class WhiteheadGraph {
 public:
  static constexpr int kMaxRank = 32;

  explicit WhiteheadGraph(int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return 2 * rank_; }
  bool has_edge(Letter x, Letter y) const;
  void add_edge(Letter x, Letter y);
  std::uint64_t neighbours(int vertex) const { return adjacency_[static_cast<std::size_t>(vertex)]; }
  std::size_t edge_count() const;
  /// Edges as (smaller code, larger code), sorted.
  std::vector<std::pair<Letter, Letter>> edges() const;

  bool operator==(const WhiteheadGraph&) const = default;

 private:
  int rank_;
  std::vector<std::uint64_t> adjacency_;
};

/// Cyclic Whitehead graph of w: {x, y} is an edge iff x != y and x y^-1 occurs
/// in the cyclic reduction of w read cyclically.
WhiteheadGraph build_whitehead_graph(const Word& w);

/// A vertex is a cut vertex when the graph induced on the remaining 2r - 1
/// vertices is disconnected (isolated vertices count as components).
std::vector<Letter> cut_vertices(const WhiteheadGraph& g);
bool has_cut_vertex(const WhiteheadGraph& g);
bool is_connected(const WhiteheadGraph& g);
/// Edge-set inclusion. Throws RankMismatch.
bool is_subgraph(const WhiteheadGraph& sub, const WhiteheadGraph& super);

/// Edges as vertex-name pairs, each pair and the list sorted lexicographically.
std::vector<std::pair<std::string, std::string>> named_edges(const WhiteheadGraph& g);
std::string to_dot(const WhiteheadGraph& g);

}  // namespace freecert
