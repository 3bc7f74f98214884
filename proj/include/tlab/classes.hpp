#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "tlab/graph.hpp"

namespace tlab {

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Recognizers

inline bool is_forest(const Graph& g) {
  return g.num_edges() == g.num_nodes() - connected_components(g).count;
}

/// Every connected component has at most as many edges as nodes.
inline bool is_pseudoforest(const Graph& g) {
  auto comp = connected_components(g);
  std::vector<int> nodes(static_cast<std::size_t>(comp.count)), edges(static_cast<std::size_t>(comp.count));
  for (NodeId v = 0; v < g.num_nodes(); ++v) ++nodes[comp.of[v]];
  for (const auto& e : g.edges()) ++edges[comp.of[e.u]];
  for (int c = 0; c < comp.count; ++c)
    if (edges[c] > nodes[c]) return false;
  return true;
}

/// Eulerian in the wide sense: all degrees even, connectivity not required.
inline bool is_eulerian_class(const Graph& g) {
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

struct Block {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};

/// Biconnected blocks (Hopcroft-Tarjan with an edge stack). Isolated nodes
/// form no block.
inline std::vector<Block> biconnected_blocks(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> edge_stack;
  std::vector<Block> blocks;
  int timer = 0;

  struct Frame {
    NodeId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        NodeId w = nb[f.next++];
        EdgeId e = *g.find_edge(f.v, w);
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      NodeId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        Block b;
        std::set<NodeId> ns;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          b.edges.push_back(e);
          ns.insert(g.edge(e).u);
          ns.insert(g.edge(e).v);
          if (e == done.parent_edge) break;
        }
        b.nodes.assign(ns.begin(), ns.end());
        std::sort(b.edges.begin(), b.edges.end());
        blocks.push_back(std::move(b));
      }
    }
  }
  return blocks;
}

/// Every block is a single edge or a cycle.
inline bool is_cactus(const Graph& g) {
  for (const auto& b : biconnected_blocks(g))
    if (b.edges.size() > 1 && b.edges.size() != b.nodes.size()) return false;
  return true;
}

inline bool is_planar(const Graph& g) {
  const int n = g.num_nodes();
  if (n <= 4) return true;
  if (g.num_edges() > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Outerplanar iff the graph plus an apex adjacent to every node is planar.
inline bool is_outerplanar_apex(const Graph& g) {
  const int n = g.num_nodes();
  if (n <= 3) return true;
  if (g.num_edges() > 2 * n - 3) return false;
  return is_planar(add_apex(g));
}

namespace detail {

// A 2-connected block is outerplanar iff it reduces to a triangle by removing
// degree-2 nodes v (neighbours x, y), where the pair xy afterwards must lie on
// the outer cycle: it is added when missing, and an xy that is already
// required on the outer cycle cannot also close the triangle x v y.
inline bool block_is_outerplanar(const Graph& g, const Block& b) {
  const int s = static_cast<int>(b.nodes.size());
  if (s <= 3) return true;
  if (static_cast<int>(b.edges.size()) > 2 * s - 3) return false;
  auto local = [&](NodeId v) {
    return static_cast<int>(std::lower_bound(b.nodes.begin(), b.nodes.end(), v) - b.nodes.begin());
  };
  // 0 = absent, 1 = edge, 2 = edge required on the outer cycle
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(s), std::vector<char>(static_cast<std::size_t>(s), 0));
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(s));
  std::vector<int> deg(static_cast<std::size_t>(s), 0);
  for (EdgeId e : b.edges) {
    int x = local(g.edge(e).u), y = local(g.edge(e).v);
    adj[x][y] = adj[y][x] = 1;
    nbrs[x].push_back(y);
    nbrs[y].push_back(x);
    ++deg[x];
    ++deg[y];
  }
  std::vector<char> alive(static_cast<std::size_t>(s), 1);
  std::vector<int> queue;
  for (int v = 0; v < s; ++v)
    if (deg[v] == 2) queue.push_back(v);
  int remaining = s;
  while (remaining > 3) {
    int v = -1;
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      if (alive[c] && deg[c] == 2) {
        v = c;
        break;
      }
    }
    if (v < 0) return false;
    int x = -1, y = -1;
    for (int w : nbrs[v])
      if (alive[w] && adj[v][w]) (x < 0 ? x : y) = w;
    alive[v] = 0;
    --remaining;
    adj[v][x] = adj[x][v] = adj[v][y] = adj[y][v] = 0;
    if (adj[x][y] == 2) return false;
    if (adj[x][y] == 1) {
      adj[x][y] = adj[y][x] = 2;
      if (--deg[x] == 2) queue.push_back(x);
      if (--deg[y] == 2) queue.push_back(y);
    } else {
      adj[x][y] = adj[y][x] = 2;
      nbrs[x].push_back(y);
      nbrs[y].push_back(x);
    }
  }
  return true;
}

}  // namespace detail

/// Outerplanarity by per-block degree-2 reduction (linear-ish, exact).
inline bool is_outerplanar(const Graph& g) {
  const int n = g.num_nodes();
  if (n <= 3) return true;
  if (g.num_edges() > 2 * n - 3) return false;
  for (const auto& b : biconnected_blocks(g))
    if (!detail::block_is_outerplanar(g, b)) return false;
  return true;
}

/// Treewidth at most 2, by series-parallel reduction: delete nodes of degree
/// at most 1, and smooth (or delete, when the neighbours are already adjacent)
/// nodes of degree 2. The graph reduces to nothing iff it has no K4 minor.
inline bool is_partial_two_tree(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<std::set<NodeId>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<NodeId> queue;
  for (NodeId v = 0; v < n; ++v)
    if (adj[v].size() <= 2) queue.push_back(v);
  int remaining = n;
  while (!queue.empty()) {
    NodeId v = queue.back();
    queue.pop_back();
    if (!alive[v] || adj[v].size() > 2) continue;
    alive[v] = 0;
    --remaining;
    std::vector<NodeId> nb(adj[v].begin(), adj[v].end());
    for (NodeId w : nb) adj[w].erase(v);
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    adj[v].clear();
    for (NodeId w : nb)
      if (adj[w].size() <= 2) queue.push_back(w);
  }
  return remaining == 0;
}

// ---------------------------------------------------------------------------
// Minor oracle (exponential; independent of the planarity code path).

enum class MinorPattern { K4, K23 };

namespace detail {

inline Graph pattern_graph(MinorPattern p) {
  if (p == MinorPattern::K4) return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

inline int pair_bit(int i, int j, int h) {
  if (i > j) std::swap(i, j);
  return i * h - i * (i + 1) / 2 + (j - i - 1);
}

// contains[mask]: the graph on h nodes with edge mask `mask` has a spanning
// copy of `pattern` (pattern must have exactly h nodes).
inline std::vector<char> pattern_table(const Graph& pattern) {
  const int h = pattern.num_nodes();
  const int pairs = h * (h - 1) / 2;
  std::vector<char> table(std::size_t{1} << pairs, 0);
  std::vector<int> perm(static_cast<std::size_t>(h));
  std::vector<unsigned> images;
  for (int i = 0; i < h; ++i) perm[i] = i;
  do {
    unsigned need = 0;
    for (const auto& e : pattern.edges()) need |= 1u << pair_bit(perm[e.u], perm[e.v], h);
    images.push_back(need);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (unsigned mask = 0; mask < table.size(); ++mask)
    for (unsigned need : images)
      if ((mask & need) == need) {
        table[mask] = 1;
        break;
      }
  return table;
}

// Connected graph `comp` (given by node list) has the pattern as a minor iff
// its nodes split into exactly h connected branch sets whose quotient contains
// the pattern: leftover nodes can always be absorbed into an adjacent branch set.
inline bool component_has_minor(const Graph& g, const std::vector<NodeId>& comp, int h,
                                const std::vector<char>& table) {
  const int s = static_cast<int>(comp.size());
  if (s < h) return false;
  std::vector<int> local(static_cast<std::size_t>(g.num_nodes()), -1);
  for (int i = 0; i < s; ++i) local[comp[i]] = i;
  std::vector<int> label(static_cast<std::size_t>(s), 0);

  auto check = [&]() {
    // Each branch set connected.
    std::vector<int> seen(static_cast<std::size_t>(s), 0);
    std::vector<int> stack;
    for (int part = 0; part < h; ++part) {
      int start = -1, size = 0;
      for (int i = 0; i < s; ++i)
        if (label[i] == part) {
          ++size;
          if (start < 0) start = i;
        }
      int reached = 0;
      stack.assign(1, start);
      seen[start] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (NodeId w : g.neighbors(comp[x])) {
          int y = local[w];
          if (y >= 0 && !seen[y] && label[y] == part) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      if (reached != size) return false;
    }
    unsigned mask = 0;
    for (int i = 0; i < s; ++i)
      for (NodeId w : g.neighbors(comp[i])) {
        int j = local[w];
        if (j > i && label[i] != label[j]) mask |= 1u << pair_bit(label[i], label[j], h);
      }
    return table[mask] != 0;
  };

  // Restricted growth strings with exactly h blocks.
  std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
    if (s - i < h - used) return false;
    if (i == s) return used == h && check();
    for (int c = 0; c < used; ++c) {
      label[i] = c;
      if (rec(i + 1, used)) return true;
    }
    if (used < h) {
      label[i] = used;
      if (rec(i + 1, used + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace detail

inline constexpr int kMinorOracleMaxNodes = 12;

/// Exact minor test by enumerating connected branch-set partitions. Throws
/// SizeGuardError above kMinorOracleMaxNodes nodes unless `force` is set.
inline bool has_minor(const Graph& g, MinorPattern pattern, bool force = false) {
  if (!force && g.num_nodes() > kMinorOracleMaxNodes)
    throw SizeGuardError("has_minor: " + std::to_string(g.num_nodes()) + " nodes exceeds guard of " +
                         std::to_string(kMinorOracleMaxNodes));
  Graph h = detail::pattern_graph(pattern);
  if (g.num_nodes() < h.num_nodes() || g.num_edges() < h.num_edges()) return false;
  static const std::array<std::vector<char>, 2> tables{detail::pattern_table(detail::pattern_graph(MinorPattern::K4)),
                                                        detail::pattern_table(detail::pattern_graph(MinorPattern::K23))};
  const auto& table = tables[pattern == MinorPattern::K4 ? 0 : 1];
  auto comp = connected_components(g);
  std::vector<std::vector<NodeId>> members(static_cast<std::size_t>(comp.count));
  for (NodeId v = 0; v < g.num_nodes(); ++v) members[comp.of[v]].push_back(v);
  for (const auto& c : members)
    if (detail::component_has_minor(g, c, h.num_nodes(), table)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Class descriptors

/// Edge-density bound |E| <= (num/den)|V|; den == 0 encodes "unbounded".
struct Density {
  long num = 0;
  long den = 1;

  static Density infinite() { return {1, 0}; }
  bool finite() const { return den != 0; }
  friend bool operator==(const Density&, const Density&) = default;
};

inline std::string to_string(const Density& d) {
  if (!d.finite()) return "inf";
  if (d.den == 1) return std::to_string(d.num);
  return std::to_string(d.num) + "/" + std::to_string(d.den);
}

struct ClassDescriptor {
  std::string name;
  std::function<bool(const Graph&)> member;
  bool monotone = false;
  bool closed_topo_minors = false;  // condition (a)
  bool closed_one_sums = false;     // condition (b)
  bool contains_c3 = false;         // condition (c)
  Density density = Density::infinite();
  // Largest edge count of a member on n nodes (tight for the builtin classes).
  // Empty when no finite bound is declared.
  std::function<long(int)> edge_capacity;

  bool satisfies_conditions() const { return closed_topo_minors && closed_one_sums && contains_c3; }

  /// Upper bound on |E| for members on n nodes: the tight capacity when
  /// declared, otherwise floor(D n). Negative when unbounded.
  long capacity(int n) const {
    if (edge_capacity) return edge_capacity(n);
    if (!density.finite()) return -1;
    return density.num * n / density.den;
  }
};

inline const std::vector<std::string>& builtin_class_names() {
  static const std::vector<std::string> names{"forest",   "pseudoforest", "eulerian",      "cactus",
                                              "outerplanar", "planar",    "partial-2-tree"};
  return names;
}

inline ClassDescriptor builtin_descriptor(const std::string& name) {
  ClassDescriptor d;
  d.name = name;
  if (name == "forest") {
    d.member = is_forest;
    d.monotone = d.closed_topo_minors = d.closed_one_sums = true;
    d.contains_c3 = false;
    d.density = {1, 1};
    d.edge_capacity = [](int n) -> long { return std::max(0, n - 1); };
  } else if (name == "pseudoforest") {
    d.member = is_pseudoforest;
    d.monotone = d.closed_topo_minors = true;
    d.closed_one_sums = false;
    d.contains_c3 = true;
    d.density = {1, 1};
    d.edge_capacity = [](int n) -> long { return n >= 3 ? n : (n == 2 ? 1 : 0); };
  } else if (name == "eulerian") {
    d.member = is_eulerian_class;
    d.monotone = d.closed_topo_minors = false;
    d.closed_one_sums = d.contains_c3 = true;
    d.density = Density::infinite();
  } else if (name == "cactus") {
    d.member = is_cactus;
    d.monotone = d.closed_topo_minors = d.closed_one_sums = d.contains_c3 = true;
    d.density = {3, 2};
    d.edge_capacity = [](int n) -> long { return n >= 1 ? 3L * (n - 1) / 2 : 0; };
  } else if (name == "outerplanar") {
    d.member = is_outerplanar;
    d.monotone = d.closed_topo_minors = d.closed_one_sums = d.contains_c3 = true;
    d.density = {2, 1};
    d.edge_capacity = [](int n) -> long { return n >= 2 ? 2L * n - 3 : 0; };
  } else if (name == "planar") {
    d.member = is_planar;
    d.monotone = d.closed_topo_minors = d.closed_one_sums = d.contains_c3 = true;
    d.density = {3, 1};
    d.edge_capacity = [](int n) -> long { return n >= 3 ? 3L * n - 6 : (n == 2 ? 1 : 0); };
  } else if (name == "partial-2-tree") {
    d.member = is_partial_two_tree;
    d.monotone = d.closed_topo_minors = d.closed_one_sums = d.contains_c3 = true;
    d.density = {2, 1};
    d.edge_capacity = [](int n) -> long { return n >= 2 ? 2L * n - 3 : 0; };
  } else {
    std::string msg = "unknown class '" + name + "'; available:";
    for (const auto& n : builtin_class_names()) msg += " " + n;
    throw UnknownClassError(msg);
  }
  return d;
}

/// First of the reduction's closure conditions the class fails to declare, or
/// '\0' when it declares all three.
inline char failing_condition(const ClassDescriptor& f) {
  if (!f.closed_topo_minors) return 'a';
  if (!f.closed_one_sums) return 'b';
  if (!f.contains_c3) return 'c';
  return '\0';
}

}  // namespace tlab
