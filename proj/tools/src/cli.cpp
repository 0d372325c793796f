#include "cblock/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "cblock/bipartite_contraction.hpp"
#include "cblock/claims.hpp"
#include "cblock/cnf.hpp"
#include "cblock/contraction_vc.hpp"
#include "cblock/errors.hpp"
#include "cblock/graph_io.hpp"
#include "cblock/reductions.hpp"
#include "cblock/transversal.hpp"
#include "cblock/vertex_cover.hpp"

namespace cblock::cli {

namespace {

/// Raised for malformed option values that CLI11 cannot check itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const VertexSet& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

Relation parse_relation(const std::string& name) {
  if (name == "subgraph") return Relation::Subgraph;
  if (name == "induced") return Relation::InducedSubgraph;
  if (name == "minor") return Relation::Minor;
  if (name == "topo") return Relation::TopologicalMinor;
  throw UsageError("unknown relation '" + name + "'");
}

HitFamily parse_family(const std::string& name, const std::string& relation) {
  const Relation rel = parse_relation(relation);
  if (name == "fvs") return {rel, SymbolicFamily::AllCycles};
  if (name == "oct") return {rel, SymbolicFamily::OddCycles};
  if (name == "vc") return {rel, SymbolicFamily::SingleEdge};
  const std::string prefix = "pattern:";
  if (name.rfind(prefix, 0) == 0) {
    std::vector<Graph> patterns;
    std::stringstream ss(name.substr(prefix.size()));
    std::string file;
    while (std::getline(ss, file, ',')) patterns.push_back(read_graph_file(file));
    return {rel, std::move(patterns)};
  }
  throw UsageError("unknown family '" + name + "' (expected fvs, oct, vc or pattern:<file>)");
}

struct GadgetChoice {
  int theorem = 1;
  std::string gadget = "c4";
  int clique = 3;
  int path = 4;
};

void add_gadget_options(CLI::App* sub, GadgetChoice& choice) {
  sub->add_option("--theorem", choice.theorem, "Construction: 1 (H copies), 2 (subdivided clique), 3 (paths)")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  sub->add_option("--gadget", choice.gadget, "Construction 1 replacement graph: c4 or a graph file")->capture_default_str();
  sub->add_option("--clique", choice.clique, "Construction 2 clique size")->capture_default_str();
  sub->add_option("--path", choice.path, "Construction 3 path order")->capture_default_str();
}

GadgetInstance build_instance(const CleanFormula& phi, const GadgetChoice& choice) {
  switch (choice.theorem) {
    case 1: return build_thm1(phi, choice.gadget == "c4" ? Graph::cycle(4) : read_graph_file(choice.gadget));
    case 2: return build_thm2(phi, choice.clique);
    default: return build_thm3(phi, choice.path);
  }
}

HitFamily family_for(const GadgetChoice& choice, const GadgetInstance& inst) {
  switch (choice.theorem) {
    case 1:
      if (choice.gadget == "c4") return HitFamily::all_cycles();
      return {Relation::Subgraph, std::vector<Graph>{*inst.meta.pattern}};
    case 2:
      if (choice.clique == 3) return HitFamily::all_cycles();
      return {Relation::Minor, std::vector<Graph>{Graph::complete(choice.clique)}};
    default: return {Relation::Subgraph, std::vector<Graph>{Graph::path(choice.path)}};
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contraction blocker toolkit: vertex cover, transversals, hardness gadgets", "cblock"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string cnf_path;

  auto* vc_cmd = app.add_subcommand("vc", "Minimum vertex cover");
  bool bipartite = false;
  std::string modulator;
  vc_cmd->add_option("graph", graph_path, "Graph file")->required();
  auto* bip_flag = vc_cmd->add_flag("--bipartite", bipartite, "Use the matching-based solver");
  vc_cmd->add_option("--modulator", modulator, "Comma-separated vertices whose removal leaves a bipartite graph")
      ->excludes(bip_flag);

  auto* tau_cmd = app.add_subcommand("tau", "Minimum hitting set of a pattern family");
  std::string family_name;
  std::string relation = "subgraph";
  std::optional<int> budget;
  tau_cmd->add_option("graph", graph_path, "Graph file")->required();
  tau_cmd->add_option("--family", family_name, "fvs, oct, vc or pattern:<file>[,<file>...]")->required();
  tau_cmd->add_option("--relation", relation, "subgraph, induced, minor or topo")->capture_default_str();
  tau_cmd->add_option("--budget", budget, "Stop once the optimum is known to exceed this");

  auto* bc_cmd = app.add_subcommand("bc", "Can at most K contractions make the graph bipartite?");
  int bc_max = 0;
  bc_cmd->add_option("graph", graph_path, "Graph file")->required();
  bc_cmd->add_option("--max", bc_max, "Contraction budget K")->required()->check(CLI::NonNegativeNumber);

  auto* cvc_cmd = app.add_subcommand("contract-vc", "Do at most k contractions lower vc by at least d?");
  int k = 0;
  int d = 0;
  bool witness = false;
  bool paper_convention = false;
  bool show_trace = false;
  cvc_cmd->add_option("graph", graph_path, "Graph file")->required();
  cvc_cmd->add_option("-k", k, "Contraction budget")->required()->check(CLI::PositiveNumber);
  cvc_cmd->add_option("-d", d, "Required drop")->required()->check(CLI::PositiveNumber);
  cvc_cmd->add_flag("--witness", witness, "Print the contracted edges on YES");
  cvc_cmd->add_flag("--paper-convention", paper_convention, "opt(C, d') is infinite when vc(C) <= d'");
  cvc_cmd->add_flag("--trace", show_trace, "Print the deciding branch");

  auto* min_cmd = app.add_subcommand("min-contract-vc", "Fewest contractions lowering vc by d");
  bool approx = false;
  bool brute = false;
  std::optional<int> cap;
  min_cmd->add_option("graph", graph_path, "Graph file")->required();
  min_cmd->add_option("-d", d, "Required drop")->required()->check(CLI::PositiveNumber);
  auto* approx_flag = min_cmd->add_flag("--approx", approx, "2-approximation (default)");
  auto* brute_flag = min_cmd->add_flag("--brute", brute, "Exhaustive search")->excludes(approx_flag);
  min_cmd->add_option("--cap", cap, "Largest set size tried by --brute")->needs(brute_flag);
  min_cmd->add_flag("--paper-convention", paper_convention, "opt(C, d') is infinite when vc(C) <= d'");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build a hardness instance from a clean CNF");
  GadgetChoice choice;
  std::string prefix;
  reduce_cmd->add_option("cnf", cnf_path, "DIMACS file")->required();
  add_gadget_options(reduce_cmd, choice);
  reduce_cmd->add_option("-o", prefix, "Output prefix for <prefix>.gr and <prefix>.roles")->required();

  auto* claims_cmd = app.add_subcommand("verify-claims", "Check the threshold and edge claims on an instance");
  std::optional<int> sample_edges;
  std::uint64_t seed = 1;
  claims_cmd->add_option("cnf", cnf_path, "DIMACS file")->required();
  add_gadget_options(claims_cmd, choice);
  claims_cmd->add_option("--sample-edges", sample_edges, "Scan only this many random edges")
      ->check(CLI::NonNegativeNumber);
  claims_cmd->add_option("--seed", seed, "Seed for --sample-edges")->capture_default_str();
  claims_cmd->add_option("--budget", budget, "Largest tau computed");

  auto* edge_cmd = app.add_subcommand("blocker-edge", "Does contracting an edge lower tau?");
  std::string edge_text;
  edge_cmd->add_option("graph", graph_path, "Graph file")->required();
  edge_cmd->add_option("-e", edge_text, "Edge U,V (omit to search for the first such edge)");
  edge_cmd->add_option("--family", family_name, "fvs, oct, vc or pattern:<file>[,<file>...]")->required();
  edge_cmd->add_option("--relation", relation, "subgraph, induced, minor or topo")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (vc_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      CoverResult result;
      if (bipartite) {
        result = vc_bipartite(g);
      } else if (!modulator.empty()) {
        result = vc_with_modulator(g, parse_int_list(modulator));
      } else {
        result = *vc_branching(g);
      }
      out << result.size << "\n" << join(result.cover) << "\n";
      return kExitOk;
    }
    if (tau_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const HitFamily family = parse_family(family_name, relation);
      for (const auto& w : antichain_warnings(family)) err << "warning: " << w << "\n";
      const auto result = tau(g, family, budget);
      if (!result) {
        err << "tau exceeds the budget " << *budget << "\n";
        return kExitBudgetExceeded;
      }
      out << result->size << "\n" << join(result->set) << "\n";
      return kExitOk;
    }
    if (bc_cmd->parsed()) {
      const auto f = bc_decide(read_graph_file(graph_path), bc_max);
      if (f) {
        out << "YES\n" << format_edges(*f) << "\n";
      } else {
        out << "NO\n";
      }
      return kExitOk;
    }
    const BoundaryConvention convention =
        paper_convention ? BoundaryConvention::Paper : BoundaryConvention::SpanningTree;
    if (cvc_cmd->parsed()) {
      const Decision decision = algorithm1(read_graph_file(graph_path), k, d, {convention, BcStrategy::Branching});
      out << (decision.yes ? "YES" : "NO") << "\n";
      if (witness && decision.witness) out << format_edges(*decision.witness) << "\n";
      if (show_trace) out << "trace=" << to_string(decision.trace) << "\n";
      return kExitOk;
    }
    if (min_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      if (brute) {
        const auto f = brute_min_contract_witness(g, d, cap.value_or(static_cast<int>(g.size())), convention);
        if (!f) {
          out << "EXCEEDS-CAP\n";
          return kExitBudgetExceeded;
        }
        out << f->size() << "\n" << format_edges(*f) << "\n";
        return kExitOk;
      }
      const Approximation result = min_contract_2approx(g, d, convention);
      if (!result.value) {
        out << "INFEASIBLE\n";
        return kExitOk;
      }
      out << *result.value << "\n" << format_edges(result.witness) << "\n";
      out << "exact=" << (result.exact ? "true" : "false") << "\n";
      return kExitOk;
    }
    if (reduce_cmd->parsed()) {
      const GadgetInstance inst = build_instance(read_cnf_file(cnf_path), choice);
      write_file(prefix + ".gr", serialize_graph(inst.graph));
      write_file(prefix + ".roles", serialize_roles(inst));
      out << inst.graph.order() << "\n";
      out << "edges=" << inst.graph.size() << "\n";
      out << "threshold=" << inst.threshold << "\n";
      out << "graph=" << prefix << ".gr\n";
      out << "roles=" << prefix << ".roles\n";
      return kExitOk;
    }
    if (claims_cmd->parsed()) {
      const CleanFormula phi = read_cnf_file(cnf_path);
      const GadgetInstance inst = build_instance(phi, choice);
      const ClaimsReport report = verify_claims(phi, inst, family_for(choice, inst), {sample_edges, seed, budget});
      out << format_report(report);
      return report.tau ? kExitOk : kExitBudgetExceeded;
    }
    if (edge_cmd->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const HitFamily family = parse_family(family_name, relation);
      if (!edge_text.empty()) {
        const auto ends = parse_int_list(edge_text);
        if (ends.size() != 2) throw UsageError("-e expects U,V");
        out << (drop_given_edge(g, make_edge(ends[0], ends[1]), family) ? "YES" : "NO") << "\n";
        return kExitOk;
      }
      const auto e = find_dropping_edge(g, family);
      out << (e ? format_edge(*e) : "NONE") << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cblock"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cblock::cli
