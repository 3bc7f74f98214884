#pragma once

// Verification campaigns: small, exhaustive checks of the reduction's
// building blocks, with text / JSON reports and DOT rendering.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tlab/classes.hpp"
#include "tlab/generators.hpp"
#include "tlab/graph.hpp"
#include "tlab/reduction.hpp"
#include "tlab/solver.hpp"

namespace tlab {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::string counterexample;  // edge-list text, set on failure
};

struct CampaignReport {
  std::string campaign;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> inventory;
  double seconds = 0;

  void pass(std::string name, std::string detail = {}) {
    checks.push_back({std::move(name), CheckStatus::Pass, std::move(detail), {}});
  }
  void fail(std::string name, std::string detail, const Graph& cex) {
    checks.push_back({std::move(name), CheckStatus::Fail, std::move(detail), serialize_edge_list(cex)});
  }
  void skip(std::string name, std::string reason) {
    checks.push_back({std::move(name), CheckStatus::Skipped, std::move(reason), {}});
  }
  int count(CheckStatus s) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
  }
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  }
};

enum class ReportFormat { Text, Structured };

inline std::string format_report(CampaignReport r, ReportFormat fmt, bool with_timing = false) {
  r.sort_checks();
  if (fmt == ReportFormat::Structured) {
    nlohmann::ordered_json j;
    j["campaign"] = r.campaign;
    j["seed"] = r.seed;
    j["inventory"] = r.inventory;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = to_string(c.status);
      cj["detail"] = c.detail;
      if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                    {"fail", r.count(CheckStatus::Fail)},
                    {"skipped", r.count(CheckStatus::Skipped)}};
    if (with_timing) j["seconds"] = r.seconds;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "campaign " << r.campaign << "\nseed " << r.seed << '\n';
  for (const auto& line : r.inventory) os << "instance " << line << '\n';
  for (const auto& c : r.checks) {
    os << to_string(c.status) << ' ' << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
    if (!c.counterexample.empty()) {
      std::istringstream in(c.counterexample);
      for (std::string line; std::getline(in, line);) os << "  | " << line << '\n';
    }
  }
  os << "summary pass " << r.count(CheckStatus::Pass) << " fail " << r.count(CheckStatus::Fail) << " skipped "
     << r.count(CheckStatus::Skipped) << '\n';
  if (with_timing) os << "seconds " << r.seconds << '\n';
  return os.str();
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

/// E_1 + path P on `len` edges (fresh nodes) + {x,y}, {x',y'}.
inline Graph extra_path_graph(const Graph& q, const EdgePartition& w, int part, int len, NodeId y, NodeId y2) {
  const int c = q.num_nodes();
  std::vector<Edge> es;
  for (EdgeId e = 0; e < q.num_edges(); ++e)
    if (w.assign[e] == part) es.push_back(q.edge(e));
  for (int i = 0; i < len; ++i) es.push_back({c + i, c + i + 1});
  es.push_back(make_edge(y, c));
  Edge last = make_edge(y2, c + len);
  if (std::find(es.begin(), es.end(), last) == es.end()) es.push_back(last);
  return Graph(c + len + 1, std::move(es));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Extra-path observation

struct ObservationOptions {
  int z = 1;
  std::string class_name = "outerplanar";
  int C = 0;  // 0: 4 for z = 1, 8 for z = 2, 4z otherwise
  int max_path = 3;
  Budget budget = {};
};

inline int default_observation_size(int z) { return z == 1 ? 4 : (z == 2 ? 8 : 4 * z); }

/// For an edge-maximal gadget Q with thickness z and every part of its witness
/// in the role of E_1: S = E_1 + P + {x,y} + {x',y'} must be in F when y = y'
/// (checked for outerplanar only) and must not be when y, y' are distinct
/// non-neighbours. Pairs y != y' joined in Q carry no claim.
inline CampaignReport campaign_observation(const ObservationOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  const ClassDescriptor f = builtin_descriptor(opt.class_name);
  const int C = opt.C > 0 ? opt.C : default_observation_size(opt.z);
  CampaignReport rep;
  rep.campaign = "observation";
  GadgetGraph q = build_gadget(C, f, opt.z, 1, opt.budget);
  rep.inventory.push_back("gadget class=" + f.name + " z=" + std::to_string(opt.z) + " C=" + std::to_string(C) +
                          " edges=" + std::to_string(q.h.num_edges()) + " maximality=" + to_string(q.maximality));
  const bool check_a = f.name == "outerplanar";
  for (int part = 0; part < opt.z; ++part) {
    for (int len = 0; len <= opt.max_path; ++len) {
      const std::string base = f.name + "/z" + std::to_string(opt.z) + "/part" + std::to_string(part + 1) + "/len" +
                               std::to_string(len);
      int same = 0, apart = 0, joined = 0;
      std::optional<Graph> bad_a, bad_b;
      std::string why_a, why_b;
      for (NodeId y = 0; y < C; ++y)
        for (NodeId y2 = 0; y2 < C; ++y2) {
          if (y != y2 && q.h.has_edge(y, y2)) {
            ++joined;
            continue;
          }
          Graph s = detail::extra_path_graph(q.h, q.witness, part, len, y, y2);
          if (y == y2) {
            if (!check_a) continue;
            ++same;
            if (!f.member(s) && !bad_a) {
              bad_a = s;
              why_a = "y=y'=" + std::to_string(y) + " not in class";
            }
          } else {
            ++apart;
            if (f.member(s) && !bad_b) {
              bad_b = s;
              why_b = "y=" + std::to_string(y) + " y'=" + std::to_string(y2) + " non-adjacent yet in class";
            }
          }
        }
      if (check_a) {
        if (bad_a)
          rep.fail(base + "/a", why_a, *bad_a);
        else
          rep.pass(base + "/a", std::to_string(same) + " cases in class");
      } else {
        rep.skip(base + "/a", "case y=y' is only claimed for outerplanar");
      }
      if (bad_b)
        rep.fail(base + "/b", why_b, *bad_b);
      else if (apart == 0)
        rep.skip(base + "/b", "no non-adjacent pair in gadget");
      else
        rep.pass(base + "/b", std::to_string(apart) + " cases outside class, " + std::to_string(joined) +
                                  " adjacent pairs without claim");
    }
  }
  rep.seconds = detail::seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Closure conditions

struct ConditionsOptions {
  std::uint64_t seed = 1;
  int samples = 200;
  int max_nodes = 9;
};

namespace detail {

/// Random member of f on 1..max_nodes nodes. Monotone classes: delete random
/// edges until inside; otherwise redraw.
inline Graph random_member(const ClassDescriptor& f, int max_nodes, Rng& rng) {
  for (int attempt = 0;; ++attempt) {
    int n = rng.uniform(1, max_nodes);
    Graph g = random_graph(n, static_cast<std::uint64_t>(rng.uniform(1, 6)), 10, rng);
    if (f.member(g)) return g;
    if (f.monotone) {
      while (!f.member(g)) g = without_edge(g, static_cast<EdgeId>(rng.below(static_cast<std::uint64_t>(g.num_edges()))));
      return g;
    }
    if (attempt > 100000) return Graph(n);
  }
}

}  // namespace detail

/// Table 1 witnesses for the three conditions, then closure sampling for every
/// flag a builtin class declares.
inline CampaignReport campaign_conditions(const ConditionsOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.campaign = "conditions";
  rep.seed = opt.seed;

  {
    auto eul = builtin_descriptor("eulerian");
    Graph c3 = complete_graph(3), c3e = without_edge(c3, 0);
    if (eul.member(c3) && !eul.member(c3e))
      rep.pass("witness/a/eulerian", "C3 eulerian, C3-e is not");
    else
      rep.fail("witness/a/eulerian", "C3 / C3-e membership unexpected", c3e);
  }
  {
    auto pf = builtin_descriptor("pseudoforest");
    Graph c3 = complete_graph(3), bow = bowtie_graph();
    if (pf.member(c3) && !pf.member(bow))
      rep.pass("witness/b/pseudoforest", "C3 is a pseudoforest, the bowtie is not");
    else
      rep.fail("witness/b/pseudoforest", "C3 / bowtie membership unexpected", bow);
  }
  {
    auto fo = builtin_descriptor("forest");
    Graph c3 = complete_graph(3);
    if (!fo.member(c3))
      rep.pass("witness/c/forest", "C3 is not a forest");
    else
      rep.fail("witness/c/forest", "C3 accepted as forest", c3);
  }
  for (const auto& name : builtin_class_names()) {
    auto f = builtin_descriptor(name);
    char c = failing_condition(f);
    std::string expect = name == "forest" ? "c" : name == "pseudoforest" ? "b" : name == "eulerian" ? "a" : "";
    std::string got = c ? std::string(1, c) : "";
    std::string check = "refusal/" + name;
    if (got == expect)
      rep.pass(check, got.empty() ? "satisfies (a)-(c)" : "refused on (" + got + ")");
    else
      rep.fail(check, "expected '" + expect + "', got '" + got + "'", Graph());
  }

  Rng rng(opt.seed);
  rep.inventory.push_back("samples per class=" + std::to_string(opt.samples) + " max_nodes=" +
                          std::to_string(opt.max_nodes));
  for (const auto& name : builtin_class_names()) {
    auto f = builtin_descriptor(name);
    std::optional<Graph> bad_mono, bad_smooth, bad_sum, bad_density;
    int smoothings = 0;
    for (int i = 0; i < opt.samples; ++i) {
      Graph g = detail::random_member(f, opt.max_nodes, rng);
      if (f.monotone && g.num_edges() > 0) {
        Graph h = without_edge(g, static_cast<EdgeId>(rng.below(static_cast<std::uint64_t>(g.num_edges()))));
        if (!f.member(h) && !bad_mono) bad_mono = g;
      }
      if (f.closed_topo_minors) {
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          if (g.degree(v) != 2) continue;
          const auto& nb = g.neighbors(v);
          if (g.has_edge(nb[0], nb[1])) continue;
          ++smoothings;
          if (!f.member(smooth_degree_two(g, v).graph) && !bad_smooth) bad_smooth = g;
          break;
        }
      }
      if (f.closed_one_sums) {
        Graph h = detail::random_member(f, opt.max_nodes, rng);
        if (g.num_nodes() > 0 && h.num_nodes() > 0) {
          NodeId a = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(g.num_nodes())));
          NodeId b = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(h.num_nodes())));
          Graph s = one_sum(g, a, h, b);
          if (!f.member(s) && !bad_sum) bad_sum = s;
        }
      }
      long cap = f.capacity(g.num_nodes());
      if (cap >= 0 && g.num_edges() > cap && !bad_density) bad_density = g;
    }
    auto record = [&](const std::string& what, bool declared, const std::optional<Graph>& bad, const std::string& ok) {
      std::string check = "closure/" + name + "/" + what;
      if (!declared)
        rep.skip(check, "not declared");
      else if (bad)
        rep.fail(check, "member violates declared closure", *bad);
      else
        rep.pass(check, ok);
    };
    record("subgraph", f.monotone, bad_mono, std::to_string(opt.samples) + " deletions");
    record("smoothing", f.closed_topo_minors, bad_smooth, std::to_string(smoothings) + " smoothings");
    record("one-sum", f.closed_one_sums, bad_sum, std::to_string(opt.samples) + " 1-sums");
    record("density", f.density.finite(), bad_density, "capacity " + to_string(f.density) + "|V| respected");
    std::string c3 = "closure/" + name + "/contains-c3";
    if (f.member(complete_graph(3)) == f.contains_c3)
      rep.pass(c3, f.contains_c3 ? "C3 member" : "C3 not member, as declared");
    else
      rep.fail(c3, "C3 membership disagrees with declaration", complete_graph(3));
  }
  rep.seconds = detail::seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Forward direction of the reduction

struct NamedGraph {
  std::string name;
  Graph g;
};

inline std::vector<NamedGraph> default_forward_graphs() {
  return {{"K4", complete_graph(4)},
          {"K33", complete_bipartite(3, 3)},
          {"prism", prism_graph()},
          {"petersen", petersen_graph()}};
}

inline std::vector<std::string> default_forward_classes() {
  return {"outerplanar", "cactus", "planar", "partial-2-tree"};
}

struct ForwardOptions {
  std::vector<NamedGraph> graphs = default_forward_graphs();
  std::vector<std::string> classes = default_forward_classes();
  int k = 3;
  std::size_t max_colorings = 2000;
};

/// Every proper k-colouring of each source maps to a valid partition of G'
/// (relaxed gadget), and the colouring comes back out unchanged.
inline CampaignReport campaign_reduction_forward(const ForwardOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.campaign = "reduction-forward";
  for (const auto& [gname, g] : opt.graphs) {
    auto colorings = enumerate_edge_colorings(g, opt.k, opt.max_colorings);
    rep.inventory.push_back(gname + " n=" + std::to_string(g.num_nodes()) + " m=" + std::to_string(g.num_edges()) +
                            " colorings=" + std::to_string(colorings.size()));
    for (const auto& cname : opt.classes) {
      const std::string check = "forward/" + cname + "/" + gname;
      if (!is_k_regular(g, opt.k)) {
        rep.skip(check, "not " + std::to_string(opt.k) + "-regular");
        continue;
      }
      if (colorings.empty()) {
        rep.skip(check, "class 2: no proper " + std::to_string(opt.k) + "-edge-colouring");
        continue;
      }
      auto f = builtin_descriptor(cname);
      auto inst = reduce(g, f, opt.k, ReduceMode::Relaxed);
      auto back = parse_instance(serialize_edge_list(inst.gprime), serialize_provenance(inst));
      if (!(back.gprime == inst.gprime) || back.origin != inst.origin) {
        rep.fail(check, "instance files do not round-trip", inst.gprime);
        continue;
      }
      std::string failure;
      for (const auto& col : colorings) {
        auto p = forward_certificate(col, inst);
        if (!verify_partition(inst.gprime, f, p)) {
          failure = "certificate rejected";
          break;
        }
        auto ex = extract_coloring(p, inst);
        if (!ex.coloring || ex.coloring->color != col.color) {
          failure = "extracted colouring differs";
          break;
        }
      }
      if (failure.empty())
        rep.pass(check, std::to_string(colorings.size()) + " colourings, n'=" +
                            std::to_string(inst.gprime.num_nodes()) + " m'=" + std::to_string(inst.gprime.num_edges()));
      else
        rep.fail(check, failure, inst.gprime);
    }
  }
  rep.seconds = detail::seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Mechanisms of the three claims in the converse direction

inline CampaignReport campaign_claims_micro() {
  auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.campaign = "claims-micro";
  const auto op = builtin_descriptor("outerplanar");

  // Restricted to G, three matchings are exactly a proper 3-colouring.
  for (const auto& [name, g] : std::vector<NamedGraph>{{"K4", complete_graph(4)},
                                                       {"2C4", disjoint_union(cycle_graph(4), cycle_graph(4))}}) {
    const int m = g.num_edges();
    long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    long matchings = 0;
    std::optional<Graph> bad;
    for (long code = 0; code < total && !bad; ++code) {
      EdgeColoring c(g, 3);
      long x = code;
      for (int e = 0; e < m; ++e, x /= 3) c.color[e] = static_cast<int>(x % 3);
      bool all_matchings = true;
      for (int j = 0; j < 3 && all_matchings; ++j) {
        std::vector<int> seen(static_cast<std::size_t>(g.num_nodes()), 0);
        for (EdgeId e = 0; e < m; ++e)
          if (c.color[e] == j && (seen[g.edge(e).u]++ || seen[g.edge(e).v]++)) all_matchings = false;
      }
      matchings += all_matchings;
      if (all_matchings != verify_coloring(g, c)) bad = g;
    }
    if (bad)
      rep.fail("claim1/" + name, "matching partition and proper colouring disagree", *bad);
    else
      rep.pass("claim1/" + name, std::to_string(total) + " assignments, " + std::to_string(matchings) + " colourings");
  }

  GadgetGraph q = build_gadget(4, op, 1, 1);
  rep.inventory.push_back("gadget K4-e edges=" + std::to_string(q.h.num_edges()));
  std::vector<std::pair<NodeId, NodeId>> apart;
  for (NodeId a = 0; a < 4; ++a)
    for (NodeId b = a + 1; b < 4; ++b)
      if (!q.h.has_edge(a, b)) apart.push_back({a, b});

  // One node v joined to two independent gadget nodes inside one part.
  {
    std::optional<Graph> bad;
    for (auto [y, y2] : apart) {
      Graph s = detail::extra_path_graph(q.h, q.witness, 0, 0, y, y2);
      if (op.member(s)) bad = s;
    }
    if (bad)
      rep.fail("claim2/K4-e", "part stays outerplanar", *bad);
    else
      rep.pass("claim2/K4-e", std::to_string(apart.size()) + " independent pairs break membership");
  }
  // Path (w, x, y, w'): the source edge xy as P.
  {
    std::optional<Graph> bad;
    for (auto [w, w2] : apart) {
      Graph s = detail::extra_path_graph(q.h, q.witness, 0, 1, w, w2);
      if (op.member(s)) bad = s;
    }
    if (bad)
      rep.fail("claim3/K4-e/distinct", "part stays outerplanar", *bad);
    else
      rep.pass("claim3/K4-e/distinct", std::to_string(apart.size()) + " pairs w != w' break membership");
    std::optional<Graph> bad_same;
    for (NodeId w = 0; w < 4; ++w) {
      Graph s = detail::extra_path_graph(q.h, q.witness, 0, 1, w, w);
      if (!op.member(s)) bad_same = s;
    }
    if (bad_same)
      rep.fail("claim3/K4-e/same", "triangle at w leaves the class", *bad_same);
    else
      rep.pass("claim3/K4-e/same", "all 4 choices of w = w' stay outerplanar");
  }
  rep.seconds = detail::seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// DOT

inline std::string emit_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

/// Source edges solid, gadget edges gray, connectors dashed with their
/// label; w-nodes double circles.
inline std::string emit_dot(const ReducedInstance& inst, const std::string& name = "Gprime") {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  std::vector<int> w_label(static_cast<std::size_t>(inst.gprime.num_nodes()), 0);
  for (std::size_t l = 0; l < inst.w.size(); ++l) w_label[inst.w[l]] = static_cast<int>(l) + 1;
  const int n = inst.source.num_nodes();
  for (NodeId v = 0; v < inst.gprime.num_nodes(); ++v) {
    os << "  " << v;
    if (w_label[v])
      os << " [shape=doublecircle, label=\"w" << w_label[v] << "\"]";
    else if (v >= n)
      os << " [shape=box]";
    os << ";\n";
  }
  for (EdgeId i = 0; i < inst.gprime.num_edges(); ++i) {
    const auto& e = inst.gprime.edge(i);
    const auto& o = inst.origin[i];
    os << "  " << e.u << " -- " << e.v;
    if (o.kind == Origin::Gadget)
      os << " [color=gray]";
    else if (o.kind == Origin::Connector)
      os << " [style=dashed, label=\"" << inst.labeling.phi[o.index] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tlab
