#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tlab {

using NodeId = int;
using EdgeId = int;

inline constexpr NodeId kNoNode = -1;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Finite simple undirected graph on nodes 0..n-1.
///
/// Edges are stored canonically (u < v) and sorted; the position of an edge in
/// edges() is its EdgeId. Graphs are immutable values.
class Graph {
 public:
  Graph() : Graph(0) {}

  explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw GraphError("negative node count");
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw GraphError("node id out of range in edge " + std::to_string(e.u) + " " +
                         std::to_string(e.v));
      if (e.u == e.v) throw GraphError("loop at node " + std::to_string(e.u));
      e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    fingerprint_ = compute_fingerprint();
  }

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }
  bool valid_node(NodeId v) const { return v >= 0 && v < n_; }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const {
    if (!valid_node(a) || !valid_node(b) || a == b) return std::nullopt;
    Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }
  bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  /// Structural hash of (n, edges); used to tie edge sets and certificates to a host.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::uint64_t compute_fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& e : edges_) mix((static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v));
    return h;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adj_;
  std::uint64_t fingerprint_ = 0;
};

/// Subset of the edges of a host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Graph& host) : host_(host.fingerprint()), bits_(host.num_edges(), false) {}
  EdgeSet(const Graph& host, const std::vector<EdgeId>& ids) : EdgeSet(host) {
    for (EdgeId e : ids) insert(e);
  }

  static EdgeSet all(const Graph& host) {
    EdgeSet s(host);
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    return s;
  }

  void insert(EdgeId e) {
    check(e);
    bits_[static_cast<std::size_t>(e)] = true;
  }
  void erase(EdgeId e) {
    check(e);
    bits_[static_cast<std::size_t>(e)] = false;
  }
  bool contains(EdgeId e) const {
    check(e);
    return bits_[static_cast<std::size_t>(e)];
  }
  int size() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }
  int host_edge_count() const { return static_cast<int>(bits_.size()); }
  std::uint64_t host() const { return host_; }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<EdgeId>(i));
    return out;
  }

 private:
  void check(EdgeId e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= bits_.size())
      throw GraphError("edge id " + std::to_string(e) + " out of range");
  }

  std::uint64_t host_ = 0;
  std::vector<bool> bits_;
};

/// Sorted set of node ids of a host graph.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(int host_nodes, std::vector<NodeId> ids) : host_nodes_(host_nodes), ids_(std::move(ids)) {
    for (NodeId v : ids_)
      if (v < 0 || v >= host_nodes_) throw GraphError("node id " + std::to_string(v) + " out of range");
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<NodeId>& ids() const { return ids_; }
  NodeId operator[](std::size_t i) const { return ids_.at(i); }
  bool contains(NodeId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  int host_nodes() const { return host_nodes_; }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  int host_nodes_ = 0;
  std::vector<NodeId> ids_;
};

inline bool is_independent(const Graph& g, const NodeSet& s) {
  for (std::size_t i = 0; i < s.ids().size(); ++i)
    for (std::size_t j = i + 1; j < s.ids().size(); ++j)
      if (g.has_edge(s.ids()[i], s.ids()[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Structural operations. All return new graphs.

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const auto& e : b.edges()) es.push_back({e.u + a.num_nodes(), e.v + a.num_nodes()});
  return Graph(a.num_nodes() + b.num_nodes(), std::move(es));
}

/// Glue g1 and g2 by identifying v1 with v2. Nodes of g1 keep their ids; the
/// remaining nodes of g2 follow in order.
inline Graph one_sum(const Graph& g1, NodeId v1, const Graph& g2, NodeId v2) {
  if (!g1.valid_node(v1) || !g2.valid_node(v2)) throw GraphError("one_sum: node out of range");
  auto map2 = [&](NodeId x) -> NodeId {
    if (x == v2) return v1;
    return g1.num_nodes() + (x < v2 ? x : x - 1);
  };
  std::vector<Edge> es = g1.edges();
  for (const auto& e : g2.edges()) es.push_back(make_edge(map2(e.u), map2(e.v)));
  return Graph(g1.num_nodes() + g2.num_nodes() - 1, std::move(es));
}

struct SmoothResult {
  Graph graph;
  std::vector<NodeId> id_map;  // old id -> new id, kNoNode for the removed node
};

/// Replace the degree-2 node v and its two edges by an edge between its neighbors.
/// Refuses when the neighbors are already adjacent.
inline SmoothResult smooth_degree_two(const Graph& g, NodeId v) {
  if (!g.valid_node(v)) throw GraphError("smooth_degree_two: node out of range");
  if (g.degree(v) != 2) throw GraphError("smooth_degree_two: node " + std::to_string(v) + " has degree " +
                                          std::to_string(g.degree(v)));
  NodeId x = g.neighbors(v)[0];
  NodeId y = g.neighbors(v)[1];
  if (g.has_edge(x, y)) throw GraphError("smooth_degree_two: neighbors already adjacent (parallel edge)");
  std::vector<NodeId> id_map(static_cast<std::size_t>(g.num_nodes()));
  for (NodeId i = 0; i < g.num_nodes(); ++i) id_map[i] = i < v ? i : (i == v ? kNoNode : i - 1);
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (e.u != v && e.v != v) es.push_back({id_map[e.u], id_map[e.v]});
  es.push_back(make_edge(id_map[x], id_map[y]));
  return {Graph(g.num_nodes() - 1, std::move(es)), std::move(id_map)};
}

/// Replace edge e = {u,v} by the path u - w - v with a fresh node w = n.
inline Graph subdivide_edge(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw GraphError("subdivide_edge: invalid edge id");
  NodeId w = g.num_nodes();
  std::vector<Edge> es;
  for (EdgeId i = 0; i < g.num_edges(); ++i)
    if (i != e) es.push_back(g.edge(i));
  es.push_back({g.edge(e).u, w});
  es.push_back({g.edge(e).v, w});
  return Graph(g.num_nodes() + 1, std::move(es));
}

/// Spanning subgraph (all nodes retained) with exactly the edges in es.
inline Graph subgraph(const Graph& g, const EdgeSet& es) {
  if (es.host() != g.fingerprint() || es.host_edge_count() != g.num_edges())
    throw GraphError("subgraph: edge set belongs to a different host graph");
  std::vector<Edge> out;
  for (EdgeId e : es.ids()) out.push_back(g.edge(e));
  return Graph(g.num_nodes(), std::move(out));
}

inline Graph subgraph(const Graph& g, const std::vector<EdgeId>& ids) { return subgraph(g, EdgeSet(g, ids)); }

/// Add one fresh node adjacent to every node.
inline Graph add_apex(const Graph& g) {
  std::vector<Edge> es = g.edges();
  for (NodeId v = 0; v < g.num_nodes(); ++v) es.push_back({v, g.num_nodes()});
  return Graph(g.num_nodes() + 1, std::move(es));
}

inline Graph with_edge(const Graph& g, NodeId a, NodeId b) {
  std::vector<Edge> es = g.edges();
  es.push_back(make_edge(a, b));
  return Graph(g.num_nodes(), std::move(es));
}

inline Graph without_edge(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw GraphError("without_edge: invalid edge id");
  std::vector<Edge> es = g.edges();
  es.erase(es.begin() + e);
  return Graph(g.num_nodes(), std::move(es));
}

struct Components {
  int count = 0;
  std::vector<int> of;  // node -> component index, numbered by smallest node
};

inline Components connected_components(const Graph& g) {
  Components c;
  c.of.assign(static_cast<std::size_t>(g.num_nodes()), -1);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (c.of[s] != -1) continue;
    c.of[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : g.neighbors(x))
        if (c.of[y] == -1) {
          c.of[y] = c.count;
          stack.push_back(y);
        }
    }
    ++c.count;
  }
  return c;
}

inline std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.num_nodes()));
  for (NodeId v = 0; v < g.num_nodes(); ++v) d[v] = g.degree(v);
  return d;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline bool is_k_regular(const Graph& g, int k) {
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Edge-list text format:
//   n m
//   u v      (m lines, 0-based)
// Lines starting with '#' and blank lines are ignored.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> to_int(std::string_view s) {
  long long x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return x;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    fn(lineno, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

inline bool is_blank_or_comment(std::string_view line) {
  auto tok = split_ws(line);
  return tok.empty() || tok[0].front() == '#';
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::optional<long long> n, m;
  std::vector<Edge> es;
  int header_line = 0;
  detail::for_each_line(text, [&](int lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto tok = detail::split_ws(line);
    if (tok.size() != 2) throw ParseError(lineno, "expected two integers");
    auto a = detail::to_int(tok[0]);
    auto b = detail::to_int(tok[1]);
    if (!a || !b || *a < 0 || *b < 0) throw ParseError(lineno, "expected two non-negative integers");
    if (!n) {
      n = a;
      m = b;
      header_line = lineno;
      return;
    }
    if (*a >= *n || *b >= *n) throw ParseError(lineno, "node id >= n");
    if (*a == *b) throw ParseError(lineno, "loop at node " + std::to_string(*a));
    es.push_back(make_edge(static_cast<NodeId>(*a), static_cast<NodeId>(*b)));
  });
  if (!n) throw ParseError(1, "missing header 'n m'");
  if (static_cast<long long>(es.size()) != *m)
    throw ParseError(header_line, "header declares " + std::to_string(*m) + " edges, found " +
                                      std::to_string(es.size()));
  auto sorted = es;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw ParseError(header_line, "duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  return Graph(static_cast<int>(*n), std::move(es));
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace tlab
