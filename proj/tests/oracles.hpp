#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code paths with the library beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "tlab/graph.hpp"

namespace oracle {

using tlab::Edge;
using tlab::Graph;
using tlab::NodeId;

inline std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.num_nodes(), std::vector<char>(g.num_nodes(), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Backtracking search for an adjacency-preserving bijection.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.num_nodes();
  if (n != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  auto ma = matrix(a), mb = matrix(b);
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = ma[v][u] == mb[w][map[u]];
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (go(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return go(0);
}

/// Node sequences of all simple paths with 1..max_len edges (each path once
/// per direction), by plain recursion over the adjacency matrix.
inline std::vector<std::vector<NodeId>> paths(const Graph& g, int max_len) {
  auto m = matrix(g);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> cur;
  std::function<void()> grow = [&] {
    if (cur.size() >= 2) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len + 1) return;
    for (NodeId w = 0; w < g.num_nodes(); ++w)
      if (m[cur.back()][w] && std::find(cur.begin(), cur.end(), w) == cur.end()) {
        cur.push_back(w);
        grow();
        cur.pop_back();
      }
  };
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    cur = {s};
    grow();
  }
  return out;
}

inline int independence_number(const Graph& g) {
  const int n = g.num_nodes();
  auto m = matrix(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int c = __builtin_popcount(s);
    if (c <= best) continue;
    bool ok = true;
    for (const auto& e : g.edges())
      if ((s >> e.u & 1) && (s >> e.v & 1)) ok = false;
    if (ok) best = c;
  }
  return best;
}

/// Proper k-edge-colouring by enumerating all k^m colourings.
inline bool edge_colorable(const Graph& g, int k) {
  const int m = g.num_edges();
  if (m == 0) return true;
  std::vector<int> c(m, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j) {
        const Edge &a = g.edge(i), &b = g.edge(j);
        bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        if (touch && c[i] == c[j]) ok = false;
      }
    if (ok) return true;
    int i = m - 1;
    while (i >= 0 && ++c[i] == k) c[i--] = 0;
    if (i < 0) return false;
  }
}

/// Acyclic iff every union in a union-find joins two different trees.
inline bool forest(const Graph& g) {
  std::vector<int> p(g.num_nodes());
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (const auto& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

/// Number of distinct cycles through each edge, capped: an edge lies on a
/// cycle iff some u-v path avoids the edge; cactus iff no edge lies on two.
inline int cycles_through_edge(const Graph& g, int e, int cap) {
  auto m = matrix(g);
  const Edge ed = g.edge(e);
  m[ed.u][ed.v] = m[ed.v][ed.u] = 0;
  int count = 0;
  std::vector<char> seen(g.num_nodes(), 0);
  std::function<void(int)> dfs = [&](int v) {
    if (count >= cap) return;
    if (v == ed.v) {
      ++count;
      return;
    }
    seen[v] = 1;
    for (int w = 0; w < g.num_nodes(); ++w)
      if (m[v][w] && !seen[w]) dfs(w);
    seen[v] = 0;
  };
  dfs(ed.u);
  return count;
}

inline bool cactus(const Graph& g) {
  for (int e = 0; e < g.num_edges(); ++e)
    if (cycles_through_edge(g, e, 2) > 1) return false;
  return true;
}

}  // namespace oracle
