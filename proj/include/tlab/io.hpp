#pragma once

// Certificate files and structured solver output.
//
// Assignment file:
//   k <parts>
//   edge <u> <v> -> <part>     (one line per edge, parts 1-based)

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tlab/graph.hpp"
#include "tlab/solver.hpp"

namespace tlab {

inline std::string serialize_assignment(const Graph& g, int k, const std::vector<int>& assign) {
  std::ostringstream os;
  os << "k " << k << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    os << "edge " << g.edge(e).u << ' ' << g.edge(e).v << " -> " << assign[e] + 1 << '\n';
  return os.str();
}

inline std::string serialize_partition(const Graph& g, const EdgePartition& p) {
  return serialize_assignment(g, p.k, p.assign);
}

inline std::string serialize_coloring(const Graph& g, const EdgeColoring& c) {
  return serialize_assignment(g, c.k, c.color);
}

namespace detail {

inline std::pair<int, std::vector<int>> parse_assignment(std::string_view text, const Graph& g) {
  int k = -1;
  std::vector<int> assign(static_cast<std::size_t>(g.num_edges()), -1);
  for_each_line(text, [&](int lineno, std::string_view line) {
    if (is_blank_or_comment(line)) return;
    auto tok = split_ws(line);
    if (tok[0] == "k") {
      auto x = tok.size() == 2 ? to_int(tok[1]) : std::nullopt;
      if (!x || *x < 0) throw ParseError(lineno, "expected 'k <parts>'");
      k = static_cast<int>(*x);
      return;
    }
    if (tok[0] != "edge" || tok.size() != 5 || tok[3] != "->") throw ParseError(lineno, "expected 'edge u v -> part'");
    auto u = to_int(tok[1]), v = to_int(tok[2]), p = to_int(tok[4]);
    if (!u || !v || !p) throw ParseError(lineno, "expected integers");
    auto id = g.find_edge(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
    if (!id) throw ParseError(lineno, "edge not in graph");
    if (assign[*id] != -1) throw ParseError(lineno, "edge listed twice");
    if (k < 0) throw ParseError(lineno, "'k' line must come first");
    if (*p < 1 || *p > k) throw ParseError(lineno, "part out of range 1.." + std::to_string(k));
    assign[*id] = static_cast<int>(*p) - 1;
  });
  if (k < 0) throw ParseError(1, "missing 'k' line");
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (assign[e] < 0)
      throw ParseError(1, "edge " + std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) + " unassigned");
  return {k, assign};
}

}  // namespace detail

inline EdgePartition parse_partition(std::string_view text, const Graph& g) {
  auto [k, assign] = detail::parse_assignment(text, g);
  EdgePartition p(g, k);
  p.assign = std::move(assign);
  return p;
}

inline EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
  auto [k, assign] = detail::parse_assignment(text, g);
  EdgeColoring c(g, k);
  c.color = std::move(assign);
  return c;
}

/// Machine-readable result: fixed key order, certificate lines last.
inline std::string format_solve_result(const Graph& g, const SolveResult& r, bool with_certificate, bool with_timing) {
  std::ostringstream os;
  os << "decision " << to_string(r.decision) << '\n';
  os << "nodes " << g.num_nodes() << '\n';
  os << "edges " << g.num_edges() << '\n';
  os << "stats expanded " << r.stats.nodes << " membership_prunes " << r.stats.membership_prunes
     << " density_prunes " << r.stats.density_prunes << " symmetry_skips " << r.stats.symmetry_skips << '\n';
  if (with_timing) os << "seconds " << r.stats.seconds << '\n';
  if (with_certificate) {
    if (r.partition) os << serialize_partition(g, *r.partition);
    if (r.coloring) os << serialize_coloring(g, *r.coloring);
  }
  return os.str();
}

}  // namespace tlab
