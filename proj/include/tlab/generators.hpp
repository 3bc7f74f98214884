#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "tlab/graph.hpp"

namespace tlab {

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined, which would break byte-identical reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  /// Bernoulli with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 nodes");
  std::vector<Edge> es;
  for (NodeId v = 0; v < n; ++v) es.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, std::move(es));
}

/// Path with `length` edges.
inline Graph path_graph(int length) {
  std::vector<Edge> es;
  for (NodeId v = 0; v < length; ++v) es.push_back({v, v + 1});
  return Graph(length + 1, std::move(es));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (NodeId u = 0; u < a; ++u)
    for (NodeId v = 0; v < b; ++v) es.push_back({u, a + v});
  return Graph(a + b, std::move(es));
}

inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (NodeId i = 0; i < 5; ++i) {
    es.push_back(make_edge(i, (i + 1) % 5));
    es.push_back(make_edge(i, i + 5));
    es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, std::move(es));
}

/// Triangular prism C3 x K2.
inline Graph prism_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// Two triangles sharing one node.
inline Graph bowtie_graph() { return one_sum(complete_graph(3), 0, complete_graph(3), 0); }

inline Graph complete_minus_edge(int n) { return without_edge(complete_graph(n), complete_graph(n).num_edges() - 1); }

/// G(n, p) with p = num/den.
inline Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> es;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) es.push_back({u, v});
  return Graph(n, std::move(es));
}

/// Uniform-ish random k-regular simple graph by the pairing model with restarts.
inline Graph random_regular_graph(int n, int k, Rng& rng) {
  if (n * k % 2 != 0 || k >= n) throw GraphError("no simple k-regular graph on n nodes");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<NodeId> points;
    for (NodeId v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) points.push_back(v);
    rng.shuffle(points);
    std::vector<Edge> es;
    bool ok = true;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < points.size(); i += 2) {
      NodeId a = points[i], b = points[i + 1];
      if (a == b || adj[a][b]) {
        ok = false;
        break;
      }
      adj[a][b] = adj[b][a] = 1;
      es.push_back(make_edge(a, b));
    }
    if (ok) return Graph(n, std::move(es));
  }
  throw GraphError("random_regular_graph: pairing model did not converge");
}

}  // namespace tlab
