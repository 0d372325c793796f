#include "cblock/claims.hpp"

#include <algorithm>
#include <random>

#include "cblock/graph_io.hpp"

namespace cblock {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "n/a";
    case Status::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

EdgeSet edges_to_scan(const Graph& g, const ClaimsOptions& options, ClaimsReport& report) {
  EdgeSet edges = g.edges();
  report.edges_total = static_cast<int>(edges.size());
  if (!options.sample_edges || *options.sample_edges >= static_cast<int>(edges.size())) return edges;
  std::mt19937_64 rng(options.seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  edges.resize(static_cast<std::size_t>(std::max(*options.sample_edges, 0)));
  std::sort(edges.begin(), edges.end());
  report.sample = edges;
  return edges;
}

}  // namespace

ClaimsReport verify_claims(const CleanFormula& phi, const GadgetInstance& inst, const HitFamily& family,
                           const ClaimsOptions& options) {
  ClaimsReport report;
  report.assignment = brute_force_sat(phi);
  report.sat = report.assignment.has_value();
  report.threshold = inst.threshold;

  const auto t = tau(inst.graph, family, options.tau_budget);
  if (!t) {
    report.tau_lower_bound = report.claim1 = report.claim2 = report.claim3 = Status::BudgetExceeded;
    return report;
  }
  report.tau = t->size;
  report.tau_lower_bound = t->size >= inst.threshold ? Status::Pass : Status::Fail;
  report.claim1 = (t->size == inst.threshold) == report.sat ? Status::Pass : Status::Fail;
  if (t->size == 0) return report;

  const EdgeSet edges = edges_to_scan(inst.graph, options, report);
  for (const Edge& e : edges) {
    ++report.edges_checked;
    if (tau(contract(inst.graph, e).quotient, family, t->size - 1)) {
      report.dropping_edge = e;
      break;
    }
  }
  if (t->size == inst.threshold) report.claim2 = report.dropping_edge ? Status::Fail : Status::Pass;
  if (t->size > inst.threshold) report.claim3 = report.dropping_edge ? Status::Pass : Status::Fail;
  return report;
}

std::string format_report(const ClaimsReport& report) {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out += std::string(key) + "=" + value + "\n";
  };
  line("sat", report.sat ? "true" : "false");
  if (report.assignment) {
    std::string bits;
    for (bool b : *report.assignment) bits += b ? '1' : '0';
    line("assignment", bits);
  }
  line("threshold", std::to_string(report.threshold));
  line("tau", report.tau ? std::to_string(*report.tau) : "unknown");
  line("tau_lower_bound", std::string(to_string(report.tau_lower_bound)));
  line("claim1", std::string(to_string(report.claim1)));
  line("claim2", std::string(to_string(report.claim2)));
  line("claim3", std::string(to_string(report.claim3)));
  line("dropping_edge", report.dropping_edge ? format_edge(*report.dropping_edge) : "none");
  line("edges_checked", std::to_string(report.edges_checked));
  line("edges_total", std::to_string(report.edges_total));
  if (!report.sample.empty()) line("sample", format_edges(report.sample));
  return out;
}

}  // namespace cblock
