#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "tlab/classes.hpp"
#include "tlab/graph.hpp"

namespace tlab {

enum class Decision { No, Yes, Unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::Unknown:
      return "unknown";
  }
  return "unknown";
}

/// Search limits. Exceeding either yields Decision::Unknown, never a wrong answer.
struct Budget {
  std::uint64_t max_nodes = 5'000'000;  // per search
  double max_seconds = 30.0;            // wall clock per top-level operation

  static Budget unlimited() { return {std::numeric_limits<std::uint64_t>::max(), 1e18}; }
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(seconds >= 1e15 ? Clock::time_point::max()
                             : Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                  std::chrono::duration<double>(seconds))) {}
  bool passed() const { return end_ != Clock::time_point::max() && Clock::now() >= end_; }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point end_;
};

/// Assignment of every edge of a host graph to a part in 0..k-1 (printed 1-based).
struct EdgePartition {
  std::uint64_t host = 0;
  int k = 0;
  std::vector<int> assign;

  EdgePartition() = default;
  EdgePartition(const Graph& g, int parts) : host(g.fingerprint()), k(parts), assign(g.num_edges(), 0) {}

  std::vector<EdgeId> part(int i) const {
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < assign.size(); ++e)
      if (assign[e] == i) out.push_back(static_cast<EdgeId>(e));
    return out;
  }
  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

/// Colour in 0..k-1 per edge.
struct EdgeColoring {
  std::uint64_t host = 0;
  int k = 0;
  std::vector<int> color;

  EdgeColoring() = default;
  EdgeColoring(const Graph& g, int colors) : host(g.fingerprint()), k(colors), color(g.num_edges(), 0) {}
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t membership_prunes = 0;
  std::uint64_t density_prunes = 0;
  std::uint64_t symmetry_skips = 0;
  double seconds = 0.0;
};

struct SolveResult {
  Decision decision = Decision::Unknown;
  std::optional<EdgePartition> partition;
  std::optional<EdgeColoring> coloring;
  SolveStats stats;
};

// ---------------------------------------------------------------------------
// Verification

inline bool verify_partition(const Graph& g, const ClassDescriptor& f, const EdgePartition& p) {
  if (p.host != g.fingerprint() || static_cast<int>(p.assign.size()) != g.num_edges())
    throw GraphError("verify_partition: partition belongs to a different host graph");
  for (int a : p.assign)
    if (a < 0 || a >= p.k) return false;
  for (int i = 0; i < p.k; ++i)
    if (!f.member(subgraph(g, p.part(i)))) return false;
  return true;
}

inline bool verify_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.host != g.fingerprint() || static_cast<int>(c.color.size()) != g.num_edges())
    throw GraphError("verify_coloring: coloring belongs to a different host graph");
  for (int col : c.color)
    if (col < 0 || col >= c.k) return false;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    std::vector<int> seen;
    for (NodeId w : g.neighbors(v)) seen.push_back(c.color[*g.find_edge(v, w)]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// F-thickness by branch and bound

struct ThicknessOptions {
  int threads = 1;
};

namespace detail {

struct BudgetHit {};
struct Cancelled {};

inline std::vector<EdgeId> branching_order(const Graph& g) {
  std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    int da = g.degree(g.edge(a).u) + g.degree(g.edge(a).v);
    int db = g.degree(g.edge(b).u) + g.degree(g.edge(b).v);
    return da > db;
  });
  return order;
}

class ThicknessSearch {
 public:
  ThicknessSearch(const Graph& g, const ClassDescriptor& f, int k, const Budget& budget, const Deadline& deadline)
      : g_(g), f_(f), k_(k), budget_(budget), deadline_(deadline), order_(branching_order(g)),
        cap_(f.capacity(g.num_nodes())), parts_(static_cast<std::size_t>(k)),
        assign_(static_cast<std::size_t>(g.num_edges()), -1) {}

  /// Place order_[pos] for pos < prefix.size() as given; returns false if a
  /// prefix step violates membership.
  bool apply_prefix(const std::vector<int>& prefix) {
    for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
      place(static_cast<int>(pos), prefix[pos]);
      if (f_.monotone && !part_ok(prefix[pos])) return false;
    }
    return true;
  }

  /// Depth-first search from position `pos`. When collect_depth >= 0, stops at
  /// that depth and records prefixes instead of descending.
  bool run(int pos, int collect_depth = -1, std::vector<std::vector<int>>* frontier = nullptr) {
    if ((++stats.nodes & 1023) == 0 && deadline_.passed()) throw BudgetHit{};
    if (stats.nodes > budget_.max_nodes) throw BudgetHit{};
    if (cancel_ && cancel_()) throw Cancelled{};
    const int m = g_.num_edges();
    if (pos == m) {
      if (!f_.monotone)
        for (int j = 0; j < k_; ++j)
          if (!part_ok(j)) return false;
      return true;
    }
    if (pos == collect_depth) {
      frontier->emplace_back(current_prefix(pos));
      return false;
    }
    if (cap_ >= 0) {
      long room = 0;
      for (int j = 0; j < k_; ++j) room += std::max(0L, cap_ - static_cast<long>(parts_[j].size()));
      if (room < m - pos) {
        ++stats.density_prunes;
        return false;
      }
    }
    for (int j = 0; j < k_; ++j) {
      if (parts_[j].empty() && j > 0 && parts_[j - 1].empty()) {
        ++stats.symmetry_skips;
        break;
      }
      place(pos, j);
      if (f_.monotone && !part_ok(j)) {
        ++stats.membership_prunes;
        unplace(pos);
        continue;
      }
      if (run(pos + 1, collect_depth, frontier)) return true;
      unplace(pos);
    }
    return false;
  }

  EdgePartition certificate() const {
    EdgePartition p(g_, k_);
    for (int e = 0; e < g_.num_edges(); ++e) p.assign[e] = assign_[e];
    return p;
  }

  void set_cancel(std::function<bool()> fn) { cancel_ = std::move(fn); }

  SolveStats stats;

 private:
  void place(int pos, int j) {
    EdgeId e = order_[pos];
    parts_[j].push_back(g_.edge(e));
    assign_[e] = j;
  }
  void unplace(int pos) {
    EdgeId e = order_[pos];
    parts_[assign_[e]].pop_back();
    assign_[e] = -1;
  }
  bool part_ok(int j) const { return f_.member(Graph(g_.num_nodes(), parts_[j])); }
  std::vector<int> current_prefix(int pos) const {
    std::vector<int> out;
    for (int i = 0; i < pos; ++i) out.push_back(assign_[order_[i]]);
    return out;
  }

  const Graph& g_;
  const ClassDescriptor& f_;
  int k_;
  Budget budget_;
  const Deadline& deadline_;
  std::vector<EdgeId> order_;
  long cap_;
  std::vector<std::vector<Edge>> parts_;
  std::vector<int> assign_;
  std::function<bool()> cancel_;
};

inline void add_stats(SolveStats& into, const SolveStats& s) {
  into.nodes += s.nodes;
  into.membership_prunes += s.membership_prunes;
  into.density_prunes += s.density_prunes;
  into.symmetry_skips += s.symmetry_skips;
}

}  // namespace detail

/// Exact decision "theta_F(g) <= k". Edges are assigned in descending order of
/// endpoint degree sum; parts are opened in index order; for monotone classes
/// a branch dies as soon as a part leaves F, and a capacity bound prunes
/// branches whose parts cannot absorb the remaining edges.
///
/// With options.threads > 1 the tree is split at a fixed depth and subtrees are
/// searched concurrently; the certificate returned is the one the sequential
/// search would find first, so the result does not depend on thread count.
inline SolveResult thickness_decide(const Graph& g, const ClassDescriptor& f, int k, const Budget& budget = {},
                                    ThicknessOptions options = {}) {
  if (k < 0) throw std::invalid_argument("thickness_decide: k must be non-negative");
  auto start = std::chrono::steady_clock::now();
  Deadline deadline(budget.max_seconds);
  SolveResult result;
  auto finish = [&](SolveResult r) {
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  if (k == 0) {
    result.decision = g.num_edges() == 0 ? Decision::Yes : Decision::No;
    if (result.decision == Decision::Yes) result.partition = EdgePartition(g, 0);
    return finish(result);
  }

  if (options.threads <= 1) {
    detail::ThicknessSearch search(g, f, k, budget, deadline);
    try {
      bool yes = search.run(0);
      result.decision = yes ? Decision::Yes : Decision::No;
      if (yes) result.partition = search.certificate();
    } catch (const detail::BudgetHit&) {
      result.decision = Decision::Unknown;
    }
    result.stats = search.stats;
    return finish(result);
  }

  // Parallel: enumerate the frontier at a depth with enough subtrees.
  std::vector<std::vector<int>> frontier;
  int depth = 0;
  {
    SolveStats collect_stats;
    for (depth = 1; depth <= g.num_edges(); ++depth) {
      frontier.clear();
      detail::ThicknessSearch probe(g, f, k, budget, deadline);
      bool yes = false;
      try {
        yes = probe.run(0, depth, &frontier);
      } catch (const detail::BudgetHit&) {
        result.decision = Decision::Unknown;
        result.stats = probe.stats;
        return finish(result);
      }
      detail::add_stats(collect_stats, probe.stats);
      if (yes) {  // solved above the frontier depth
        result.decision = Decision::Yes;
        result.partition = probe.certificate();
        result.stats = collect_stats;
        return finish(result);
      }
      if (static_cast<int>(frontier.size()) >= 4 * options.threads || depth == g.num_edges()) break;
    }
    result.stats = collect_stats;
  }
  if (frontier.empty()) {
    result.decision = Decision::No;
    return finish(result);
  }

  const int count = static_cast<int>(frontier.size());
  std::atomic<int> next{0};
  std::atomic<int> best{count};  // lowest frontier index found yes
  std::atomic<bool> unknown{false};
  std::vector<std::optional<EdgePartition>> found(static_cast<std::size_t>(count));
  std::mutex stats_mutex;
  auto worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      detail::ThicknessSearch search(g, f, k, budget, deadline);
      search.set_cancel([&best, i]() { return best.load() < i; });
      try {
        if (search.apply_prefix(frontier[i]) && search.run(static_cast<int>(frontier[i].size()))) {
          found[i] = search.certificate();
          int cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (const detail::BudgetHit&) {
        unknown = true;
      } catch (const detail::Cancelled&) {
      }
      std::lock_guard lock(stats_mutex);
      detail::add_stats(result.stats, search.stats);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int b = best.load();
  if (b < count) {
    result.decision = Decision::Yes;
    result.partition = found[b];
    if (!verify_partition(g, f, *result.partition)) throw std::logic_error("parallel certificate failed verification");
  } else {
    result.decision = unknown ? Decision::Unknown : Decision::No;
  }
  return finish(result);
}

/// Smallest k with theta_F(g) <= k; nullopt when the budget runs out first.
inline std::optional<int> thickness_exact(const Graph& g, const ClassDescriptor& f, const Budget& budget = {},
                                          ThicknessOptions options = {}) {
  for (int k = 0;; ++k) {
    auto r = thickness_decide(g, f, k, budget, options);
    if (r.decision == Decision::Yes) return k;
    if (r.decision == Decision::Unknown) return std::nullopt;
    if (k > g.num_edges()) throw std::logic_error("thickness_exact: no k found (class rejects single edges?)");
  }
}

inline constexpr double kOracleMaxAssignments = 1e7;

/// Independent oracle: every one of the k^m assignments in lexicographic order,
/// membership evaluated on complete parts only. Throws SizeGuardError when
/// k^m exceeds kOracleMaxAssignments unless `force` is set.
inline SolveResult thickness_oracle(const Graph& g, const ClassDescriptor& f, int k, bool force = false) {
  const int m = g.num_edges();
  SolveResult result;
  if (k < 0) throw std::invalid_argument("thickness_oracle: k must be non-negative");
  if (k == 0) {
    result.decision = m == 0 ? Decision::Yes : Decision::No;
    if (m == 0) result.partition = EdgePartition(g, 0);
    return result;
  }
  if (!force && std::pow(static_cast<double>(k), m) > kOracleMaxAssignments)
    throw SizeGuardError("thickness_oracle: " + std::to_string(k) + "^" + std::to_string(m) +
                         " assignments exceeds guard");
  if (m > 30) throw SizeGuardError("thickness_oracle: more than 30 edges");

  // Membership memo over edge subsets (subsets recur across assignments).
  const bool memo = m <= 24;
  std::vector<signed char> cache(memo ? (std::size_t{1} << m) : 0, -1);
  auto member_mask = [&](std::uint32_t mask) {
    if (memo && cache[mask] >= 0) return cache[mask] == 1;
    std::vector<EdgeId> ids;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) ids.push_back(e);
    bool ok = f.member(subgraph(g, ids));
    if (memo) cache[mask] = ok ? 1 : 0;
    return ok;
  };

  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(k));
  while (true) {
    ++result.stats.nodes;
    std::fill(masks.begin(), masks.end(), 0u);
    for (int e = 0; e < m; ++e) masks[assign[e]] |= 1u << e;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) ok = member_mask(masks[j]);
    if (ok) {
      result.decision = Decision::Yes;
      EdgePartition p(g, k);
      p.assign = assign;
      result.partition = p;
      return result;
    }
    // Odometer increment, last edge fastest.
    int i = m - 1;
    while (i >= 0 && ++assign[i] == k) assign[i--] = 0;
    if (i < 0) break;
  }
  result.decision = Decision::No;
  return result;
}

// ---------------------------------------------------------------------------
// Edge colouring

/// Exact proper k-edge-colouring by backtracking over edges in EdgeId order.
/// A new colour may only be opened as the next unused index.
inline SolveResult edge_color_decide(const Graph& g, int k, const Budget& budget = {}) {
  auto start = std::chrono::steady_clock::now();
  Deadline deadline(budget.max_seconds);
  SolveResult result;
  const int m = g.num_edges();
  if (k < 0) throw std::invalid_argument("edge_color_decide: k must be non-negative");
  std::vector<std::vector<char>> used(static_cast<std::size_t>(g.num_nodes()),
                                      std::vector<char>(static_cast<std::size_t>(std::max(k, 1)), 0));
  std::vector<int> color(static_cast<std::size_t>(m), -1);

  std::function<bool(int, int)> rec = [&](int e, int opened) -> bool {
    if ((++result.stats.nodes & 1023) == 0 && deadline.passed()) throw detail::BudgetHit{};
    if (result.stats.nodes > budget.max_nodes) throw detail::BudgetHit{};
    if (e == m) return true;
    auto [u, v] = g.edge(e);
    for (int c = 0; c < std::min(k, opened + 1); ++c) {
      if (used[u][c] || used[v][c]) continue;
      used[u][c] = used[v][c] = 1;
      color[e] = c;
      if (rec(e + 1, std::max(opened, c + 1))) return true;
      used[u][c] = used[v][c] = 0;
    }
    if (opened + 1 < k) ++result.stats.symmetry_skips;
    return false;
  };
  try {
    bool yes = (m == 0) || (k > 0 && rec(0, 0));
    result.decision = yes ? Decision::Yes : Decision::No;
    if (yes) {
      EdgeColoring c(g, k);
      for (int e = 0; e < m; ++e) c.color[e] = color[e];
      result.coloring = c;
    }
  } catch (const detail::BudgetHit&) {
    result.decision = Decision::Unknown;
  }
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// Minimum number of colours of a proper edge colouring; nullopt on budget exhaustion.
inline std::optional<int> chromatic_index(const Graph& g, const Budget& budget = {}) {
  if (g.num_edges() == 0) return 0;
  for (int k = max_degree(g);; ++k) {
    auto r = edge_color_decide(g, k, budget);
    if (r.decision == Decision::Yes) return k;
    if (r.decision == Decision::Unknown) return std::nullopt;
  }
}

/// Every proper k-edge-colouring (colours not canonicalised), up to `limit`.
inline std::vector<EdgeColoring> enumerate_edge_colorings(const Graph& g, int k, std::size_t limit) {
  std::vector<EdgeColoring> out;
  const int m = g.num_edges();
  std::vector<std::vector<char>> used(static_cast<std::size_t>(g.num_nodes()),
                                      std::vector<char>(static_cast<std::size_t>(std::max(k, 1)), 0));
  EdgeColoring cur(g, k);
  std::function<void(int)> rec = [&](int e) {
    if (out.size() >= limit) return;
    if (e == m) {
      out.push_back(cur);
      return;
    }
    auto [u, v] = g.edge(e);
    for (int c = 0; c < k; ++c) {
      if (used[u][c] || used[v][c]) continue;
      used[u][c] = used[v][c] = 1;
      cur.color[e] = c;
      rec(e + 1);
      used[u][c] = used[v][c] = 0;
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Independent sets

struct IndependentSetResult {
  Decision decision = Decision::Unknown;  // Yes: nodes holds >= target; No: proven impossible
  NodeSet nodes;                          // otherwise the best set found
};

inline constexpr int kExactIndependentSetMaxNodes = 40;

/// Caro-Wei guarantee ceil(n^2 / (n + 2m)); 0 for the empty graph.
inline int caro_wei_bound(const Graph& g) {
  long n = g.num_nodes(), m = g.num_edges();
  if (n == 0) return 0;
  return static_cast<int>((n * n + (n + 2 * m) - 1) / (n + 2 * m));
}

/// Greedy minimum-degree selection (meets the Caro-Wei bound); if it falls
/// short and n <= 40, an exact branch and bound either finds a set of size
/// `target` or proves none exists.
inline IndependentSetResult independent_set_atleast(const Graph& g, int target, const Budget& budget = {}) {
  const int n = g.num_nodes();
  IndependentSetResult result;
  {
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg = degrees(g);
    std::vector<NodeId> chosen;
    for (int remaining = n; remaining > 0;) {
      NodeId best = kNoNode;
      for (NodeId v = 0; v < n; ++v)
        if (alive[v] && (best == kNoNode || deg[v] < deg[best])) best = v;
      chosen.push_back(best);
      std::vector<NodeId> removed{best};
      for (NodeId w : g.neighbors(best))
        if (alive[w]) removed.push_back(w);
      for (NodeId r : removed) {
        alive[r] = 0;
        --remaining;
      }
      for (NodeId r : removed)
        for (NodeId w : g.neighbors(r))
          if (alive[w]) --deg[w];
    }
    result.nodes = NodeSet(n, chosen);
    if (static_cast<int>(chosen.size()) >= target) {
      result.decision = Decision::Yes;
      return result;
    }
  }
  if (n > kExactIndependentSetMaxNodes) return result;

  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }
  Deadline deadline(budget.max_seconds);
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  std::function<bool(std::uint64_t, std::uint64_t, int)> rec = [&](std::uint64_t cand, std::uint64_t set,
                                                                    int size) -> bool {
    if ((++nodes & 1023) == 0 && deadline.passed()) throw detail::BudgetHit{};
    if (nodes > budget.max_nodes) throw detail::BudgetHit{};
    if (size >= target) {
      found = set;
      return true;
    }
    if (size + std::popcount(cand) < target) return false;
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    if (rec(cand & ~bit & ~nbr[v], set | bit, size + 1)) return true;
    return rec(cand & ~bit, set, size);
  };
  try {
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (rec(all, 0, 0)) {
      std::vector<NodeId> ids;
      for (int v = 0; v < n; ++v)
        if (found & (std::uint64_t{1} << v)) ids.push_back(v);
      result.decision = Decision::Yes;
      result.nodes = NodeSet(n, ids);
    } else {
      result.decision = Decision::No;
    }
  } catch (const detail::BudgetHit&) {
    result.decision = Decision::Unknown;
  }
  return result;
}

}  // namespace tlab
