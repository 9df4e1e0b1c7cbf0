#include "freecert/whgraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace freecert {

WhiteheadGraph::WhiteheadGraph(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw InputError("Whitehead graphs support ranks 1.." + std::to_string(kMaxRank) +
                     ", got " + std::to_string(rank));
  }
  adjacency_.assign(static_cast<std::size_t>(2 * rank), 0);
}

bool WhiteheadGraph::has_edge(Letter x, Letter y) const {
  return (adjacency_[static_cast<std::size_t>(x.code())] >> y.code()) & 1U;
}

void WhiteheadGraph::add_edge(Letter x, Letter y) {
  if (x == y) throw InputError("Whitehead graphs have no loops");
  if (x.index() > rank_ || y.index() > rank_) throw InputError("vertex outside rank");
  adjacency_[static_cast<std::size_t>(x.code())] |= std::uint64_t{1} << y.code();
  adjacency_[static_cast<std::size_t>(y.code())] |= std::uint64_t{1} << x.code();
}

std::size_t WhiteheadGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto bits : adjacency_) twice += static_cast<std::size_t>(std::popcount(bits));
  return twice / 2;
}

std::vector<std::pair<Letter, Letter>> WhiteheadGraph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (int v = 0; v < vertex_count(); ++v) {
    for (int u = v + 1; u < vertex_count(); ++u) {
      if ((adjacency_[static_cast<std::size_t>(v)] >> u) & 1U) {
        out.emplace_back(Letter::from_code(v), Letter::from_code(u));
      }
    }
  }
  return out;
}

WhiteheadGraph build_whitehead_graph(const Word& w) {
  WhiteheadGraph g(w.rank());
  const CyclicReduction reduction = cyclic_reduce(w);
  const auto core = reduction.core.word().letters();
  if (core.size() < 2) return g;
  for (std::size_t i = 0; i < core.size(); ++i) {
    // The factor x z contributes the edge {x, z^-1}.
    const Letter x = core[i];
    const Letter y = core[(i + 1) % core.size()].inverse();
    if (x != y) g.add_edge(x, y);
  }
  return g;
}

namespace {

int count_components(const WhiteheadGraph& g) {
  const int n = g.vertex_count();
  std::uint64_t seen = 0;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1U) continue;
    ++components;
    std::uint64_t frontier = std::uint64_t{1} << s;
    seen |= frontier;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t fresh = g.neighbours(v) & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
  }
  return components;
}

}  // namespace

std::vector<Letter> cut_vertices(const WhiteheadGraph& g) {
  const int n = g.vertex_count();
  const int components = count_components(g);

  // pieces[v]: number of components that v's own component falls into once v
  // is deleted (0 for an isolated vertex). Low-link DFS, one tree per component.
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> pieces(static_cast<std::size_t>(n), 0);
  int clock = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    const auto vi = static_cast<std::size_t>(v);
    disc[vi] = low[vi] = clock++;
    int separated = 0;
    int children = 0;
    for (std::uint64_t bits = g.neighbours(v); bits != 0; bits &= bits - 1) {
      const int u = std::countr_zero(bits);
      const auto ui = static_cast<std::size_t>(u);
      if (u == parent) continue;
      if (disc[ui] == -1) {
        ++children;
        dfs(u, v);
        low[vi] = std::min(low[vi], low[ui]);
        if (low[ui] >= disc[vi]) ++separated;
      } else {
        low[vi] = std::min(low[vi], disc[ui]);
      }
    }
    pieces[vi] = parent == -1 ? children : separated + 1;
  };
  for (int v = 0; v < n; ++v) {
    if (disc[static_cast<std::size_t>(v)] == -1) dfs(v, -1);
  }

  std::vector<Letter> out;
  if (n - 1 < 2) return out;
  for (int v = 0; v < n; ++v) {
    const int remaining_components = components - 1 + pieces[static_cast<std::size_t>(v)];
    if (remaining_components >= 2) out.push_back(Letter::from_code(v));
  }
  return out;
}

bool has_cut_vertex(const WhiteheadGraph& g) { return !cut_vertices(g).empty(); }

bool is_connected(const WhiteheadGraph& g) { return count_components(g) == 1; }

bool is_subgraph(const WhiteheadGraph& sub, const WhiteheadGraph& super) {
  if (sub.rank() != super.rank()) throw RankMismatch(sub.rank(), super.rank());
  for (int v = 0; v < sub.vertex_count(); ++v) {
    if ((sub.neighbours(v) & ~super.neighbours(v)) != 0) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::string>> named_edges(const WhiteheadGraph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : g.edges()) {
    auto a = vertex_name(x);
    auto b = vertex_name(y);
    if (b < a) std::swap(a, b);
    out.emplace_back(std::move(a), std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const WhiteheadGraph& g) {
  std::ostringstream os;
  os << "graph whitehead {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << vertex_name(Letter::from_code(v)) << "\";\n";
  }
  for (const auto& [a, b] : named_edges(g)) {
    os << "  \"" << a << "\" -- \"" << b << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace freecert
