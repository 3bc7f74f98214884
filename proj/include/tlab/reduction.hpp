#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlab/classes.hpp"
#include "tlab/graph.hpp"
#include "tlab/solver.hpp"

namespace tlab {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gadget independence number fell short; `achieved` is the best set size found.
class InsufficientIndependence : public std::runtime_error {
 public:
  InsufficientIndependence(int achieved, int target)
      : std::runtime_error("gadget independent set of size " + std::to_string(achieved) + " below target " +
                           std::to_string(target) + "; raise C"),
        achieved(achieved),
        target(target) {}
  int achieved;
  int target;
};

// ---------------------------------------------------------------------------
// Short-path labeling

/// Unordered pairs (e < f) of edges lying together on some path with at most
/// three edges: they share an endpoint, or an edge of g joins an endpoint of e
/// to an endpoint of f.
inline std::vector<std::pair<EdgeId, EdgeId>> conflict_pairs(const Graph& g) {
  std::set<std::pair<EdgeId, EdgeId>> out;
  auto add = [&](EdgeId a, EdgeId b) {
    if (a != b) out.insert({std::min(a, b), std::max(a, b)});
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edge(e);
    for (NodeId x : {a, b}) {
      for (NodeId y : g.neighbors(x)) {
        if (y == a || y == b) continue;
        add(e, *g.find_edge(x, y));
        for (NodeId z : g.neighbors(y))
          if (z != x) add(e, *g.find_edge(y, z));
      }
    }
  }
  return {out.begin(), out.end()};
}

/// Every simple path with 1..max_len edges, each as its sequence of EdgeIds.
/// Paths are listed once per direction.
inline std::vector<std::vector<EdgeId>> enumerate_short_paths(const Graph& g, int max_len) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  std::function<void()> extend = [&]() {
    if (!edges.empty()) out.push_back(edges);
    if (static_cast<int>(edges.size()) == max_len) return;
    NodeId last = nodes.back();
    for (NodeId w : g.neighbors(last)) {
      if (std::find(nodes.begin(), nodes.end(), w) != nodes.end()) continue;
      nodes.push_back(w);
      edges.push_back(*g.find_edge(last, w));
      extend();
      nodes.pop_back();
      edges.pop_back();
    }
  };
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    nodes.assign(1, s);
    edges.clear();
    extend();
  }
  return out;
}

struct Labeling {
  std::uint64_t host = 0;
  int label_count = 0;       // L
  std::vector<int> phi;      // EdgeId -> label in 1..L
};

/// Independent check by path enumeration: no path with at most three edges
/// repeats a label.
inline bool labeling_is_valid(const Graph& g, const Labeling& lab) {
  if (lab.host != g.fingerprint() || static_cast<int>(lab.phi.size()) != g.num_edges()) return false;
  for (int l : lab.phi)
    if (l < 1 || l > lab.label_count) return false;
  for (const auto& path : enumerate_short_paths(g, 3)) {
    std::vector<int> ls;
    for (EdgeId e : path) ls.push_back(lab.phi[e]);
    std::sort(ls.begin(), ls.end());
    if (std::adjacent_find(ls.begin(), ls.end()) != ls.end()) return false;
  }
  return true;
}

/// Worst-case label count 2D(D-1)+1 for maximum degree D.
inline int label_bound(int max_deg) { return 2 * max_deg * (max_deg - 1) + 1; }

/// First-fit labels over edges in EdgeId order, avoiding every conflicting
/// edge's label. `k` is the regularity degree of the intended input; for
/// irregular graphs the bound uses the maximum degree.
inline Labeling label_short_paths(const Graph& g, int k) {
  std::vector<std::vector<EdgeId>> conflicts(static_cast<std::size_t>(g.num_edges()));
  for (auto [a, b] : conflict_pairs(g)) {
    conflicts[a].push_back(b);
    conflicts[b].push_back(a);
  }
  Labeling lab;
  lab.host = g.fingerprint();
  lab.phi.assign(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::vector<char> taken(conflicts[e].size() + 2, 0);
    for (EdgeId f : conflicts[e])
      if (lab.phi[f] > 0 && lab.phi[f] < static_cast<int>(taken.size())) taken[lab.phi[f]] = 1;
    int l = 1;
    while (taken[l]) ++l;
    lab.phi[e] = l;
    lab.label_count = std::max(lab.label_count, l);
  }
  const int deg = std::max(k, max_degree(g));
  if (lab.label_count > label_bound(deg))
    throw std::logic_error("label_short_paths: " + std::to_string(lab.label_count) + " labels exceed bound " +
                           std::to_string(label_bound(deg)));
  if (!labeling_is_valid(g, lab)) throw std::logic_error("label_short_paths: labeling failed path verification");
  return lab;
}

// ---------------------------------------------------------------------------
// Gadget

enum class Maximality { None, Assumed, Verified };

inline const char* to_string(Maximality m) {
  switch (m) {
    case Maximality::None:
      return "none";
    case Maximality::Assumed:
      return "assumed";
    case Maximality::Verified:
      return "verified";
  }
  return "none";
}

struct GadgetGraph {
  Graph h;
  int k = 0;
  std::string class_name;
  EdgePartition witness;  // h split into k members of the class
  NodeSet indep;          // w_1 .. w_alpha
  Maximality maximality = Maximality::None;
  bool relaxed = false;
  // True when C(C,2) exceeds k times the class edge capacity, so the gadget
  // cannot be complete and its thickness is exactly k.
  bool thickness_is_k = false;
};

/// Gadget size: smallest integer above (1 + 2kD) L.
inline int choose_C(int label_count, const ClassDescriptor& f, int k) {
  if (!f.density.finite())
    throw ReductionError("choose_C: class '" + f.name + "' has no finite density bound (condition (a) fails)");
  if (label_count < 1 || k < 1) throw ReductionError("choose_C: label count and k must be positive");
  const long num = f.density.num, den = f.density.den;
  long c = (den + 2L * k * num) * label_count / den + 1;
  long pairs = c * (c - 1) / 2;
  if (pairs <= static_cast<long>(k) * f.capacity(static_cast<int>(c)))
    throw std::logic_error("choose_C: chosen C does not exceed the k-part edge capacity");
  return static_cast<int>(c);
}

struct GadgetProgress {
  int accepted = 0;
  int rejected = 0;
  int extended = 0;  // accepted by extending the current witness without search
};

namespace detail {

inline Budget remaining(const Budget& b, std::chrono::steady_clock::time_point start) {
  Budget r = b;
  if (b.max_seconds < 1e15)
    r.max_seconds = b.max_seconds - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.max_seconds <= 0) r.max_seconds = 1e-9;
  return r;
}

inline EdgePartition partition_from_parts(const Graph& g, const std::vector<std::vector<Edge>>& parts) {
  EdgePartition p(g, static_cast<int>(parts.size()));
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (const auto& e : parts[j]) p.assign[*g.find_edge(e.u, e.v)] = static_cast<int>(j);
  return p;
}

}  // namespace detail

/// Edge-maximal graph on C nodes with F-thickness at most k: a single greedy
/// pass over node pairs in lexicographic order keeps a pair iff the graph
/// still splits into k members. For monotone classes a rejected pair stays
/// rejected as the graph grows, so one pass suffices; a final re-scan of every
/// non-edge certifies maximality.
inline GadgetGraph build_gadget(int C, const ClassDescriptor& f, int k, int target_indep, const Budget& budget = {},
                                ThicknessOptions options = {}, GadgetProgress* progress = nullptr) {
  if (!f.monotone) throw ReductionError("build_gadget: class '" + f.name + "' is not monotone");
  if (C < 1 || k < 1) throw ReductionError("build_gadget: C and k must be positive");
  auto start = std::chrono::steady_clock::now();
  GadgetProgress local;
  GadgetProgress& prog = progress ? *progress : local;

  std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(k));
  std::vector<Edge> edges;
  for (NodeId u = 0; u < C; ++u) {
    for (NodeId v = u + 1; v < C; ++v) {
      Edge e{u, v};
      bool placed = false;
      for (int j = 0; j < k && !placed; ++j) {
        auto trial = parts[j];
        trial.push_back(e);
        if (f.member(Graph(C, trial))) {
          parts[j] = std::move(trial);
          placed = true;
        }
      }
      if (placed) {
        edges.push_back(e);
        ++prog.accepted;
        ++prog.extended;
        continue;
      }
      auto trial_edges = edges;
      trial_edges.push_back(e);
      Graph cand(C, trial_edges);
      auto r = thickness_decide(cand, f, k, detail::remaining(budget, start), options);
      if (r.decision == Decision::Unknown)
        throw BudgetExceeded("build_gadget: budget exceeded at pair " + std::to_string(u) + " " + std::to_string(v) +
                             " with " + std::to_string(edges.size()) + " edges");
      if (r.decision == Decision::Yes) {
        edges = std::move(trial_edges);
        for (auto& p : parts) p.clear();
        for (EdgeId id = 0; id < cand.num_edges(); ++id) parts[r.partition->assign[id]].push_back(cand.edge(id));
        ++prog.accepted;
      } else {
        ++prog.rejected;
      }
    }
  }

  GadgetGraph gadget;
  gadget.h = Graph(C, edges);
  gadget.k = k;
  gadget.class_name = f.name;
  gadget.witness = detail::partition_from_parts(gadget.h, parts);
  if (!verify_partition(gadget.h, f, gadget.witness)) throw std::logic_error("build_gadget: witness failed");

  for (NodeId u = 0; u < C; ++u)
    for (NodeId v = u + 1; v < C; ++v) {
      if (gadget.h.has_edge(u, v)) continue;
      auto r = thickness_decide(with_edge(gadget.h, u, v), f, k, detail::remaining(budget, start), options);
      if (r.decision == Decision::Unknown)
        throw BudgetExceeded("build_gadget: budget exceeded during maximality re-scan");
      if (r.decision == Decision::Yes)
        throw std::logic_error("build_gadget: non-edge " + std::to_string(u) + " " + std::to_string(v) +
                               " accepted on re-scan");
    }
  gadget.maximality = Maximality::Verified;
  long pairs = static_cast<long>(C) * (C - 1) / 2;
  long cap = f.capacity(C);
  gadget.thickness_is_k = cap >= 0 && pairs > static_cast<long>(k) * cap;

  auto is = independent_set_atleast(gadget.h, target_indep, detail::remaining(budget, start));
  if (is.decision != Decision::Yes) {
    if (is.decision == Decision::Unknown && is.nodes.size() < target_indep && gadget.h.num_nodes() <= kExactIndependentSetMaxNodes)
      throw BudgetExceeded("build_gadget: budget exceeded in independent set search");
    throw InsufficientIndependence(is.nodes.size(), target_indep);
  }
  gadget.indep = is.nodes;
  return gadget;
}

/// Edgeless gadget on L nodes: sound for the forward direction only.
inline GadgetGraph relaxed_gadget(int label_count, const ClassDescriptor& f, int k) {
  GadgetGraph gadget;
  gadget.h = Graph(label_count);
  gadget.k = k;
  gadget.class_name = f.name;
  gadget.witness = EdgePartition(gadget.h, k);
  std::vector<NodeId> all(static_cast<std::size_t>(label_count));
  for (int i = 0; i < label_count; ++i) all[i] = i;
  gadget.indep = NodeSet(label_count, all);
  gadget.maximality = Maximality::None;
  gadget.relaxed = true;
  return gadget;
}

// ---------------------------------------------------------------------------
// Assembly

enum class Origin { Source, Gadget, Connector };

inline const char* to_string(Origin o) {
  switch (o) {
    case Origin::Source:
      return "source";
    case Origin::Gadget:
      return "gadget";
    case Origin::Connector:
      return "connector";
  }
  return "source";
}

struct EdgeOrigin {
  Origin kind = Origin::Source;
  EdgeId index = 0;  // source EdgeId (source, connector) or gadget EdgeId
  char side = 'u';   // connector only: which endpoint of the source edge
  friend bool operator==(const EdgeOrigin&, const EdgeOrigin&) = default;
};

struct ReducedInstance {
  Graph gprime;
  Graph source;
  GadgetGraph gadget;
  Labeling labeling;
  std::string class_name;
  int k = 0;
  std::vector<EdgeOrigin> origin;       // G' EdgeId -> provenance
  std::vector<NodeId> source_nodes;     // V(G) -> V(G')
  std::vector<NodeId> gadget_nodes;     // V(H) -> V(G')
  std::vector<NodeId> w;                // label l (1-based) -> w_l in V(G'), at index l-1
  std::vector<EdgeId> source_edge_image;  // E(G) -> E(G')

  bool relaxed() const { return gadget.relaxed; }
};

/// G' = G and H side by side, plus {u, w_phi(e)} and {v, w_phi(e)} for every
/// source edge e = {u, v}.
inline ReducedInstance assemble(const Graph& g, const Labeling& lab, const GadgetGraph& gadget) {
  if (lab.host != g.fingerprint() || static_cast<int>(lab.phi.size()) != g.num_edges())
    throw GraphError("assemble: labeling belongs to a different graph");
  if (lab.label_count > gadget.indep.size())
    throw ReductionError("assemble: " + std::to_string(lab.label_count) + " labels but only " +
                         std::to_string(gadget.indep.size()) + " independent gadget nodes");
  ReducedInstance inst;
  inst.source = g;
  inst.gadget = gadget;
  inst.labeling = lab;
  inst.class_name = gadget.class_name;
  inst.k = gadget.k;
  const int n = g.num_nodes();
  for (NodeId v = 0; v < n; ++v) inst.source_nodes.push_back(v);
  for (NodeId x = 0; x < gadget.h.num_nodes(); ++x) inst.gadget_nodes.push_back(n + x);
  for (int l = 1; l <= lab.label_count; ++l) inst.w.push_back(inst.gadget_nodes[gadget.indep[l - 1]]);

  std::vector<std::pair<Edge, EdgeOrigin>> tagged;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    NodeId w = inst.w[lab.phi[e] - 1];
    tagged.push_back({make_edge(u, v), {Origin::Source, e, 'u'}});
    tagged.push_back({make_edge(u, w), {Origin::Connector, e, 'u'}});
    tagged.push_back({make_edge(v, w), {Origin::Connector, e, 'v'}});
  }
  for (EdgeId e = 0; e < gadget.h.num_edges(); ++e) {
    auto [x, y] = gadget.h.edge(e);
    tagged.push_back({make_edge(inst.gadget_nodes[x], inst.gadget_nodes[y]), {Origin::Gadget, e, 'u'}});
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < tagged.size(); ++i)
    if (tagged[i].first == tagged[i - 1].first)
      throw std::logic_error("assemble: parallel edge " + std::to_string(tagged[i].first.u) + " " +
                             std::to_string(tagged[i].first.v));
  std::vector<Edge> es;
  for (const auto& [e, o] : tagged) {
    es.push_back(e);
    inst.origin.push_back(o);
  }
  inst.gprime = Graph(n + gadget.h.num_nodes(), std::move(es));
  inst.source_edge_image.assign(static_cast<std::size_t>(g.num_edges()), -1);
  for (EdgeId i = 0; i < inst.gprime.num_edges(); ++i)
    if (inst.origin[i].kind == Origin::Source) inst.source_edge_image[inst.origin[i].index] = i;
  return inst;
}

// ---------------------------------------------------------------------------
// Certificate translation

/// Part i of G' = gadget witness part i plus the triangle {u, v, w_phi(e)} of
/// every source edge e of colour i.
inline EdgePartition forward_certificate(const EdgeColoring& coloring, const ReducedInstance& inst) {
  if (coloring.k != inst.k) throw ReductionError("forward_certificate: colouring uses a different k");
  if (!verify_coloring(inst.source, coloring)) throw ReductionError("forward_certificate: improper colouring");
  if (inst.gadget.witness.k != inst.k) throw ReductionError("forward_certificate: gadget witness has wrong part count");
  EdgePartition p(inst.gprime, inst.k);
  for (EdgeId i = 0; i < inst.gprime.num_edges(); ++i) {
    const auto& o = inst.origin[i];
    p.assign[i] = o.kind == Origin::Gadget ? inst.gadget.witness.assign[o.index] : coloring.color[o.index];
  }
  return p;
}

struct ExtractResult {
  std::optional<EdgeColoring> coloring;
  // On failure: a path a-b-c of source nodes whose two edges share a part.
  std::optional<std::array<NodeId, 3>> violating_path;
};

/// Colour each source edge by the part of its image in G'. Fails (without
/// throwing) when two incident source edges share a part.
inline ExtractResult extract_coloring(const EdgePartition& p, const ReducedInstance& inst) {
  if (p.host != inst.gprime.fingerprint() || static_cast<int>(p.assign.size()) != inst.gprime.num_edges())
    throw GraphError("extract_coloring: partition belongs to a different graph");
  if (p.k != inst.k) throw ReductionError("extract_coloring: partition has " + std::to_string(p.k) + " parts, expected " +
                                          std::to_string(inst.k));
  const Graph& g = inst.source;
  EdgeColoring c(g, inst.k);
  for (EdgeId e = 0; e < g.num_edges(); ++e) c.color[e] = p.assign[inst.source_edge_image[e]];
  ExtractResult r;
  for (NodeId b = 0; b < g.num_nodes(); ++b) {
    const auto& nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (c.color[*g.find_edge(b, nb[i])] == c.color[*g.find_edge(b, nb[j])]) {
          r.violating_path = std::array<NodeId, 3>{nb[i], b, nb[j]};
          return r;
        }
  }
  r.coloring = c;
  return r;
}

// ---------------------------------------------------------------------------
// Pipeline

enum class ReduceMode { Paper, Relaxed };

inline ReducedInstance reduce(const Graph& g, const ClassDescriptor& f, int k, ReduceMode mode,
                              const Budget& budget = {}, ThicknessOptions options = {}) {
  if (char c = failing_condition(f))
    throw ReductionError(std::string("class '") + f.name + "' refused: condition (" + c + ") fails");
  if (k < 1) throw ReductionError("reduce: k must be positive");
  if (!is_k_regular(g, k)) throw ReductionError("reduce: input graph is not " + std::to_string(k) + "-regular");
  Labeling lab = label_short_paths(g, k);
  GadgetGraph gadget;
  if (mode == ReduceMode::Paper) {
    int C = choose_C(lab.label_count, f, k);
    gadget = build_gadget(C, f, k, lab.label_count, budget, options);
  } else {
    gadget = relaxed_gadget(lab.label_count, f, k);
  }
  return assemble(g, lab, gadget);
}

// ---------------------------------------------------------------------------
// Instance files: the G' edge list plus a provenance sidecar.

inline std::string serialize_provenance(const ReducedInstance& inst) {
  std::ostringstream os;
  os << "# thickness-lab provenance v1\n";
  os << "class " << inst.class_name << '\n';
  os << "k " << inst.k << '\n';
  os << "mode " << (inst.relaxed() ? "relaxed" : "paper") << '\n';
  os << "maximality " << to_string(inst.gadget.maximality) << '\n';
  os << "source_nodes " << inst.source.num_nodes() << '\n';
  os << "gadget_nodes " << inst.gadget.h.num_nodes() << '\n';
  os << "labels " << inst.labeling.label_count << '\n';
  for (NodeId v = 0; v < inst.source.num_nodes(); ++v) os << "source_node " << v << ' ' << inst.source_nodes[v] << '\n';
  for (NodeId x = 0; x < inst.gadget.h.num_nodes(); ++x) os << "gadget_node " << x << ' ' << inst.gadget_nodes[x] << '\n';
  for (int l = 1; l <= inst.labeling.label_count; ++l) os << "w " << l << ' ' << inst.w[l - 1] << '\n';
  for (EdgeId e = 0; e < inst.source.num_edges(); ++e)
    os << "phi " << e << ' ' << inst.source.edge(e).u << ' ' << inst.source.edge(e).v << ' ' << inst.labeling.phi[e]
       << '\n';
  for (EdgeId i = 0; i < inst.gprime.num_edges(); ++i) {
    const auto& e = inst.gprime.edge(i);
    const auto& o = inst.origin[i];
    os << "edge " << e.u << ' ' << e.v << ' ' << to_string(o.kind) << ' ' << o.index;
    if (o.kind == Origin::Connector) os << ' ' << o.side;
    if (o.kind == Origin::Gadget) os << ' ' << inst.gadget.witness.assign[o.index] + 1;
    os << '\n';
  }
  return os.str();
}

/// Rebuild an instance from its two files. The gadget's independent set is the
/// w-node list; the witness partition comes from the gadget edge lines.
inline ReducedInstance parse_instance(std::string_view edge_list, std::string_view provenance) {
  Graph gprime = parse_edge_list(edge_list);
  ReducedInstance inst;
  int source_n = -1, gadget_n = -1, labels = -1;
  std::string mode = "relaxed", maximality = "none";
  std::vector<std::array<long long, 4>> phi;
  struct Line {
    Edge e;
    EdgeOrigin o;
    int part;
  };
  std::vector<Line> lines;
  std::vector<std::pair<long long, long long>> wlines;
  detail::for_each_line(provenance, [&](int lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto tok = detail::split_ws(line);
    auto num = [&](std::size_t i) {
      if (i >= tok.size()) throw ParseError(lineno, "missing field");
      auto x = detail::to_int(tok[i]);
      if (!x) throw ParseError(lineno, "expected integer");
      return *x;
    };
    std::string key(tok[0]);
    if (key == "class") {
      if (tok.size() != 2) throw ParseError(lineno, "class takes one name");
      inst.class_name = std::string(tok[1]);
    } else if (key == "k") {
      inst.k = static_cast<int>(num(1));
    } else if (key == "mode") {
      mode = std::string(tok.at(1));
    } else if (key == "maximality") {
      maximality = std::string(tok.at(1));
    } else if (key == "source_nodes") {
      source_n = static_cast<int>(num(1));
    } else if (key == "gadget_nodes") {
      gadget_n = static_cast<int>(num(1));
    } else if (key == "labels") {
      labels = static_cast<int>(num(1));
    } else if (key == "source_node" || key == "gadget_node") {
      auto& vec = key == "source_node" ? inst.source_nodes : inst.gadget_nodes;
      if (num(1) != static_cast<long long>(vec.size())) throw ParseError(lineno, "node lines out of order");
      vec.push_back(static_cast<NodeId>(num(2)));
    } else if (key == "w") {
      wlines.push_back({num(1), num(2)});
    } else if (key == "phi") {
      phi.push_back({num(1), num(2), num(3), num(4)});
    } else if (key == "edge") {
      if (tok.size() < 5) throw ParseError(lineno, "edge line needs origin");
      Line l{make_edge(static_cast<NodeId>(num(1)), static_cast<NodeId>(num(2))), {}, 0};
      std::string kind(tok[3]);
      l.o.index = static_cast<EdgeId>(num(4));
      if (kind == "source") {
        l.o.kind = Origin::Source;
      } else if (kind == "gadget") {
        l.o.kind = Origin::Gadget;
        l.part = static_cast<int>(num(5)) - 1;
      } else if (kind == "connector") {
        l.o.kind = Origin::Connector;
        if (tok.size() < 6 || (tok[5] != "u" && tok[5] != "v")) throw ParseError(lineno, "connector side must be u or v");
        l.o.side = tok[5][0];
      } else {
        throw ParseError(lineno, "unknown origin '" + kind + "'");
      }
      lines.push_back(l);
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  });
  if (source_n < 0 || gadget_n < 0 || labels < 0 || inst.class_name.empty())
    throw ParseError(1, "provenance header incomplete");
  if (static_cast<int>(inst.source_nodes.size()) != source_n || static_cast<int>(inst.gadget_nodes.size()) != gadget_n)
    throw ParseError(1, "node map incomplete");
  if (static_cast<int>(lines.size()) != gprime.num_edges())
    throw ParseError(1, "provenance lists " + std::to_string(lines.size()) + " edges, graph has " +
                            std::to_string(gprime.num_edges()));

  std::vector<Edge> source_edges;
  for (const auto& p : phi) source_edges.push_back(make_edge(static_cast<NodeId>(p[1]), static_cast<NodeId>(p[2])));
  inst.source = Graph(source_n, source_edges);
  inst.labeling.host = inst.source.fingerprint();
  inst.labeling.label_count = labels;
  inst.labeling.phi.assign(static_cast<std::size_t>(inst.source.num_edges()), 0);
  for (const auto& p : phi) {
    auto id = inst.source.find_edge(static_cast<NodeId>(p[1]), static_cast<NodeId>(p[2]));
    if (!id || *id != p[0]) throw ParseError(1, "phi lines not in canonical edge order");
    inst.labeling.phi[*id] = static_cast<int>(p[3]);
  }

  std::vector<NodeId> back(static_cast<std::size_t>(gprime.num_nodes()), kNoNode);
  for (NodeId x = 0; x < gadget_n; ++x) back.at(inst.gadget_nodes[x]) = x;
  std::vector<std::pair<Edge, int>> gadget_edges;
  for (const auto& l : lines)
    if (l.o.kind == Origin::Gadget) gadget_edges.push_back({make_edge(back.at(l.e.u), back.at(l.e.v)), l.part});
  std::vector<Edge> ge;
  for (const auto& [e, part] : gadget_edges) ge.push_back(e);
  inst.gadget.h = Graph(gadget_n, ge);
  inst.gadget.k = inst.k;
  inst.gadget.class_name = inst.class_name;
  inst.gadget.relaxed = mode == "relaxed";
  inst.gadget.maximality = maximality == "verified" ? Maximality::Verified
                           : maximality == "assumed" ? Maximality::Assumed
                                                     : Maximality::None;
  inst.gadget.witness = EdgePartition(inst.gadget.h, inst.k);
  for (const auto& [e, part] : gadget_edges) inst.gadget.witness.assign[*inst.gadget.h.find_edge(e.u, e.v)] = part;
  std::sort(wlines.begin(), wlines.end());
  std::vector<NodeId> indep;
  for (const auto& [l, v] : wlines) {
    inst.w.push_back(static_cast<NodeId>(v));
    indep.push_back(back.at(static_cast<std::size_t>(v)));
  }
  inst.gadget.indep = NodeSet(gadget_n, indep);

  inst.gprime = gprime;
  inst.origin.assign(static_cast<std::size_t>(gprime.num_edges()), {});
  for (const auto& l : lines) {
    auto id = gprime.find_edge(l.e.u, l.e.v);
    if (!id) throw ParseError(1, "provenance edge not in graph");
    inst.origin[*id] = l.o;
  }
  inst.source_edge_image.assign(static_cast<std::size_t>(inst.source.num_edges()), -1);
  for (EdgeId i = 0; i < gprime.num_edges(); ++i)
    if (inst.origin[i].kind == Origin::Source) inst.source_edge_image.at(inst.origin[i].index) = i;
  return inst;
}

}  // namespace tlab
