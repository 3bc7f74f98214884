#pragma once

// Small-instance isomorphism helpers: canonical codes by colour refinement plus
// permutation search inside cells, and exhaustive generation of all graphs on
// up to ~8 nodes up to isomorphism.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "tlab/graph.hpp"

namespace tlab {

namespace detail {

// Equitable partition by iterated degree refinement; returns an ordered list of cells.
inline std::vector<std::vector<NodeId>> refine_cells(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int num_colors = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, NodeId>> sig(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (NodeId w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [s, v] : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (NodeId v = 0; v < n; ++v) color[v] = ids[sig[v].first];
    if (next == num_colors) break;
    num_colors = next;
  }
  std::vector<std::vector<NodeId>> cells(static_cast<std::size_t>(num_colors));
  for (NodeId v = 0; v < n; ++v) cells[color[v]].push_back(v);
  return cells;
}

inline std::vector<char> adjacency_code(const Graph& g, const std::vector<NodeId>& order) {
  const int n = g.num_nodes();
  std::vector<char> code;
  code.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code.push_back(g.has_edge(order[i], order[j]) ? 1 : 0);
  return code;
}

}  // namespace detail

/// Canonical adjacency code: equal for two graphs iff they are isomorphic.
/// Exponential in the sizes of the refined cells; intended for n <= 12.
inline std::vector<char> canonical_code(const Graph& g) {
  auto cells = detail::refine_cells(g);
  std::vector<char> best;
  bool have = false;
  // Iterate over the product of permutations of every cell.
  for (auto& c : cells) std::sort(c.begin(), c.end());
  while (true) {
    std::vector<NodeId> order;
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    auto code = detail::adjacency_code(g, order);
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
    std::size_t i = 0;
    for (; i < cells.size(); ++i)
      if (std::next_permutation(cells[i].begin(), cells[i].end())) break;
    if (i == cells.size()) break;
  }
  best.insert(best.begin(), static_cast<char>(g.num_nodes()));
  return best;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  auto da = degrees(a), db = degrees(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

/// All graphs on n nodes, one per isomorphism class, in a deterministic order.
/// Built by extending each class on n-1 nodes with a new node of every neighbourhood.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 9) throw std::invalid_argument("nonisomorphic_graphs: n must be in 0..9");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> prev = nonisomorphic_graphs(n - 1);
  std::map<std::vector<char>, Graph> seen;
  for (const auto& g : prev) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> es = g.edges();
      for (NodeId v = 0; v < n - 1; ++v)
        if (mask & (1u << v)) es.push_back({v, n - 1});
      Graph h(n, std::move(es));
      auto code = canonical_code(h);
      seen.emplace(std::move(code), std::move(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace tlab
