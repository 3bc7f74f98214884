// thickness-lab: recognizers, exact solvers, the reduction pipeline and the
// verification campaigns from the command line.
//
// Exit codes: 0 yes/success, 1 no, 2 usage or parse error, 3 budget exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tlab/classes.hpp"
#include "tlab/graph.hpp"
#include "tlab/io.hpp"
#include "tlab/laboratory.hpp"
#include "tlab/reduction.hpp"
#include "tlab/solver.hpp"

namespace {

using namespace tlab;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string class_name;
  bool all = false;
  int k = -1;
  std::string mode = "paper";
  std::uint64_t budget_nodes = Budget{}.max_nodes;
  double budget_secs = Budget{}.max_seconds;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool to_stdout = false;
  int threads = 1;
  bool timing = false;
  bool oracle = false;
  std::string certificate_out;
  std::string provenance;
  std::string partition;
  std::string campaign;
  int z = 1;
  int gadget_size = 0;
  int samples = 200;
  std::string cex_dir;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

Graph load_graph(const std::string& path) {
  if (path.empty()) throw UsageError("missing input graph");
  return parse_edge_list(read_file(path));
}

Budget budget_of(const Config& c) {
  Budget b;
  b.max_nodes = c.budget_nodes;
  b.max_seconds = c.budget_secs;
  if (const char* env = std::getenv("THICKNESS_LAB_BUDGET_SECS")) {
    char* end = nullptr;
    double cap = std::strtod(env, &end);
    if (end == env || cap <= 0) throw UsageError("THICKNESS_LAB_BUDGET_SECS must be a positive number");
    b.max_seconds = std::min(b.max_seconds, cap);
  }
  return b;
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw UsageError("--format " + c.format + " is not available for this command");
}

void require_k(const Config& c) {
  if (c.k < 0) throw UsageError("--k is required");
}

int cmd_recognize(const Config& c) {
  require_format(c, {"text", "structured"});
  if (c.all == !c.class_name.empty()) throw UsageError("give exactly one of --class or --all");
  // Validate the class before touching the input, so a bad name is reported first.
  if (!c.all) builtin_descriptor(c.class_name);
  Graph g = load_graph(c.input);
  if (c.all) {
    for (const auto& name : builtin_class_names())
      std::cout << name << (c.format == "structured" ? " " : ":") << (builtin_descriptor(name).member(g) ? "true" : "false")
                << '\n';
    return kExitYes;
  }
  bool yes = builtin_descriptor(c.class_name).member(g);
  if (c.format == "structured")
    std::cout << c.class_name << ' ' << (yes ? "true" : "false") << '\n';
  else
    std::cout << (yes ? "true" : "false") << '\n';
  return yes ? kExitYes : kExitNo;
}

int emit_decision(const Config& c, const Graph& g, const SolveResult& r, const std::string& extra) {
  bool cert_stdout = c.to_stdout || (c.out.empty() && c.format == "structured");
  if (c.format == "structured") {
    std::cout << format_solve_result(g, r, cert_stdout, c.timing) << extra;
  } else {
    std::cout << to_string(r.decision) << '\n' << extra;
    if (c.timing) std::cout << "seconds " << r.stats.seconds << '\n';
    if (c.to_stdout) {
      if (r.partition) std::cout << serialize_partition(g, *r.partition);
      if (r.coloring) std::cout << serialize_coloring(g, *r.coloring);
    }
  }
  if (!c.out.empty()) {
    if (r.partition) write_file(c.out, serialize_partition(g, *r.partition));
    if (r.coloring) write_file(c.out, serialize_coloring(g, *r.coloring));
  }
  if (r.decision == Decision::Unknown) {
    std::cerr << "budget exceeded\n";
    return kExitBudget;
  }
  return r.decision == Decision::Yes ? kExitYes : kExitNo;
}

int cmd_thickness(const Config& c) {
  require_format(c, {"text", "structured"});
  require_k(c);
  if (c.class_name.empty()) throw UsageError("--class is required");
  auto f = builtin_descriptor(c.class_name);
  Graph g = load_graph(c.input);
  auto r = thickness_decide(g, f, c.k, budget_of(c), ThicknessOptions{c.threads});
  std::string extra;
  if (c.oracle) {
    try {
      auto o = thickness_oracle(g, f, c.k);
      if (r.decision != Decision::Unknown && o.decision != r.decision) {
        std::cerr << "oracle disagrees: solver " << to_string(r.decision) << ", oracle " << to_string(o.decision)
                  << '\n';
        return kExitUsage;
      }
      extra = "oracle " + std::string(to_string(o.decision)) + " (agrees)\n";
    } catch (const SizeGuardError& e) {
      extra = "oracle skipped: " + std::string(e.what()) + "\n";
    }
  }
  return emit_decision(c, g, r, extra);
}

int cmd_edgecolor(const Config& c) {
  require_format(c, {"text", "structured"});
  require_k(c);
  Graph g = load_graph(c.input);
  return emit_decision(c, g, edge_color_decide(g, c.k, budget_of(c)), "");
}

ReduceMode parse_mode(const std::string& m) {
  if (m == "paper") return ReduceMode::Paper;
  if (m == "relaxed") return ReduceMode::Relaxed;
  throw UsageError("--mode must be paper or relaxed");
}

int cmd_reduce(const Config& c) {
  require_format(c, {"text", "structured"});
  require_k(c);
  if (c.class_name.empty()) throw UsageError("--class is required");
  if (c.out.empty() && !c.to_stdout) throw UsageError("reduce needs --out PREFIX or --stdout");
  auto f = builtin_descriptor(c.class_name);
  auto mode = parse_mode(c.mode);
  Graph g = load_graph(c.input);
  ReducedInstance inst = reduce(g, f, c.k, mode, budget_of(c), ThicknessOptions{c.threads});
  std::string edges = serialize_edge_list(inst.gprime), prov = serialize_provenance(inst);
  int gadget_m = inst.gadget.h.num_edges();
  int connectors = 2 * g.num_edges();
  std::ostringstream summary;
  summary << "n' " << inst.gprime.num_nodes() << " = " << g.num_nodes() << " + " << inst.gadget.h.num_nodes() << '\n'
          << "m' " << inst.gprime.num_edges() << " = " << g.num_edges() << " + " << gadget_m << " + " << connectors
          << '\n'
          << "labels " << inst.labeling.label_count << '\n'
          << "maximality " << to_string(inst.gadget.maximality) << '\n';
  if (!c.out.empty()) {
    write_file(c.out + ".g", edges);
    write_file(c.out + ".prov", prov);
    summary << "wrote " << c.out << ".g " << c.out << ".prov\n";
  }
  std::cout << summary.str();
  if (c.to_stdout) std::cout << edges << prov;
  if (!c.certificate_out.empty()) {
    auto col = edge_color_decide(g, c.k, budget_of(c));
    if (col.decision == Decision::Unknown) return kExitBudget;
    if (col.decision == Decision::No) {
      std::cout << "certificate none: source has no proper " << c.k << "-edge-colouring\n";
      return kExitNo;
    }
    write_file(c.certificate_out, serialize_partition(inst.gprime, forward_certificate(*col.coloring, inst)));
    std::cout << "certificate " << c.certificate_out << '\n';
  }
  return kExitYes;
}

int cmd_verify(const Config& c) {
  require_format(c, {"text", "structured"});
  if (c.provenance.empty() || c.partition.empty()) throw UsageError("verify needs --provenance and --partition");
  if (c.input.empty()) throw UsageError("missing instance file");
  ReducedInstance inst = parse_instance(read_file(c.input), read_file(c.provenance));
  EdgePartition p = parse_partition(read_file(c.partition), inst.gprime);
  auto f = builtin_descriptor(inst.class_name);
  if (p.k != inst.k) {
    std::cout << "partition invalid: " << p.k << " parts, instance expects " << inst.k << '\n';
    return kExitNo;
  }
  if (!verify_partition(inst.gprime, f, p)) {
    std::cout << "partition invalid\n";
    return kExitNo;
  }
  std::cout << "partition valid\n";
  auto ex = extract_coloring(p, inst);
  if (!ex.coloring) {
    const auto& path = *ex.violating_path;
    std::cout << "colouring none: path " << path[0] << ' ' << path[1] << ' ' << path[2] << " in one part\n";
    return kExitNo;
  }
  std::cout << "colouring proper\n";
  if (c.to_stdout) std::cout << serialize_coloring(inst.source, *ex.coloring);
  if (!c.out.empty()) write_file(c.out, serialize_coloring(inst.source, *ex.coloring));
  return kExitYes;
}

int cmd_campaign(const Config& c) {
  require_format(c, {"text", "structured"});
  CampaignReport rep;
  if (c.campaign == "observation") {
    ObservationOptions o;
    o.z = c.z;
    if (!c.class_name.empty()) o.class_name = c.class_name;
    o.C = c.gadget_size;
    o.budget = budget_of(c);
    rep = campaign_observation(o);
  } else if (c.campaign == "conditions") {
    ConditionsOptions o;
    o.seed = c.seed;
    o.samples = c.samples;
    rep = campaign_conditions(o);
  } else if (c.campaign == "reduction-forward") {
    ForwardOptions o;
    if (c.k >= 0) o.k = c.k;
    if (!c.class_name.empty()) o.classes = {c.class_name};
    if (!c.input.empty()) o.graphs = {{c.input, load_graph(c.input)}};
    rep = campaign_reduction_forward(o);
  } else if (c.campaign == "claims-micro") {
    rep = campaign_claims_micro();
  } else {
    throw UsageError("unknown campaign '" + c.campaign +
                     "'; available: observation conditions reduction-forward claims-micro");
  }
  std::string text = format_report(rep, c.format == "structured" ? ReportFormat::Structured : ReportFormat::Text,
                                   c.timing);
  if (!c.out.empty()) write_file(c.out, text);
  if (c.out.empty() || c.to_stdout) std::cout << text;
  if (!c.cex_dir.empty()) {
    std::filesystem::create_directories(c.cex_dir);
    for (const auto& check : rep.checks) {
      if (check.counterexample.empty()) continue;
      std::string file = check.name;
      for (char& ch : file)
        if (ch == '/') ch = '_';
      write_file((std::filesystem::path(c.cex_dir) / (file + ".g")).string(), check.counterexample);
    }
  }
  return rep.ok() ? kExitYes : kExitNo;
}

int cmd_dot(const Config& c) {
  require_format(c, {"text", "dot"});
  std::string text;
  if (!c.provenance.empty())
    text = emit_dot(parse_instance(read_file(c.input), read_file(c.provenance)));
  else
    text = emit_dot(load_graph(c.input));
  if (!c.out.empty()) write_file(c.out, text);
  if (c.out.empty() || c.to_stdout) std::cout << text;
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thickness-lab: F-thickness solvers and the edge-colouring reduction"};
  app.require_subcommand(1);
  Config c;

  auto budget_flags = [&](CLI::App* s) {
    s->add_option("--budget-nodes", c.budget_nodes, "search node cap")->check(CLI::PositiveNumber);
    s->add_option("--budget-secs", c.budget_secs, "wall-clock cap in seconds")->check(CLI::PositiveNumber);
    s->add_option("--threads", c.threads, "solver threads (decision only)")->check(CLI::Range(1, 256));
  };
  auto output_flags = [&](CLI::App* s) {
    s->add_option("--format", c.format, "text | structured | dot")
        ->check(CLI::IsMember({"text", "structured", "dot"}));
    s->add_option("--out", c.out, "output file");
    s->add_flag("--stdout", c.to_stdout, "also print certificates / files to stdout");
    s->add_flag("--timing", c.timing, "include wall-clock timing (breaks byte-identical output)");
    s->add_option("--seed", c.seed, "random seed");
  };

  auto* rec = app.add_subcommand("recognize", "class membership");
  rec->add_option("--class", c.class_name, "class name");
  rec->add_flag("--all", c.all, "every builtin class");
  rec->add_option("input", c.input, "edge-list file ('-' for stdin)");
  output_flags(rec);

  auto* th = app.add_subcommand("thickness", "decide theta_F(G) <= k");
  th->add_option("--class", c.class_name, "class name")->required();
  th->add_option("--k", c.k, "number of parts")->required()->check(CLI::NonNegativeNumber);
  th->add_flag("--oracle", c.oracle, "cross-check against brute force");
  th->add_option("input", c.input, "edge-list file")->required();
  budget_flags(th);
  output_flags(th);

  auto* ec = app.add_subcommand("edgecolor", "decide chi'(G) <= k");
  ec->add_option("--k", c.k, "number of colours")->required()->check(CLI::NonNegativeNumber);
  ec->add_option("input", c.input, "edge-list file")->required();
  budget_flags(ec);
  output_flags(ec);

  auto* rd = app.add_subcommand("reduce", "build G' from a k-regular G");
  rd->add_option("--class", c.class_name, "class name")->required();
  rd->add_option("--k", c.k, "regularity / part count")->required()->check(CLI::PositiveNumber);
  rd->add_option("--mode", c.mode, "paper | relaxed")->check(CLI::IsMember({"paper", "relaxed"}));
  rd->add_option("--certificate", c.certificate_out, "write the forward certificate here");
  rd->add_option("input", c.input, "edge-list file")->required();
  budget_flags(rd);
  output_flags(rd);

  auto* vf = app.add_subcommand("verify", "check a partition of G' and extract the colouring");
  vf->add_option("--provenance", c.provenance, "provenance sidecar")->required();
  vf->add_option("--partition", c.partition, "partition file")->required();
  vf->add_option("input", c.input, "G' edge-list file")->required();
  output_flags(vf);

  auto* cp = app.add_subcommand("campaign", "run a verification campaign");
  cp->add_option("name", c.campaign, "observation | conditions | reduction-forward | claims-micro")->required();
  cp->add_option("--z", c.z, "gadget thickness (observation)")->check(CLI::PositiveNumber);
  cp->add_option("--gadget-size", c.gadget_size, "gadget node count (observation)")->check(CLI::PositiveNumber);
  cp->add_option("--class", c.class_name, "class name");
  cp->add_option("--k", c.k, "k (reduction-forward)")->check(CLI::PositiveNumber);
  cp->add_option("--samples", c.samples, "closure samples per class (conditions)")->check(CLI::PositiveNumber);
  cp->add_option("--counterexamples", c.cex_dir, "directory for counterexample files");
  cp->add_option("--graph", c.input, "source graph (reduction-forward)");
  budget_flags(cp);
  output_flags(cp);

  auto* dt = app.add_subcommand("dot", "render a graph or instance as DOT");
  dt->add_option("--provenance", c.provenance, "render as instance with this sidecar");
  dt->add_option("input", c.input, "edge-list file")->required();
  output_flags(dt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rec) return cmd_recognize(c);
    if (*th) return cmd_thickness(c);
    if (*ec) return cmd_edgecolor(c);
    if (*rd) return cmd_reduce(c);
    if (*vf) return cmd_verify(c);
    if (*cp) return cmd_campaign(c);
    if (*dt) return cmd_dot(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownClassError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
