#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cblock/cnf.hpp"
#include "cblock/reductions.hpp"
#include "cblock/transversal.hpp"

namespace cblock {

enum class Status { Pass, Fail, NotApplicable, BudgetExceeded };

std::string_view to_string(Status status);

struct ClaimsOptions {
  /// Check only this many edges, drawn without replacement with a seeded
  /// generator, when scanning for a tau-dropping contraction.
  std::optional<int> sample_edges;
  std::uint64_t seed = 1;
  /// Give up on tau above this value.
  std::optional<int> tau_budget;
};

struct ClaimsReport {
  bool sat = false;
  std::optional<std::vector<bool>> assignment;
  int threshold = 0;
  /// Nullopt when the tau budget was exceeded.
  std::optional<int> tau;
  /// tau >= threshold.
  Status tau_lower_bound = Status::NotApplicable;
  /// (tau == threshold) <=> sat.
  Status claim1 = Status::NotApplicable;
  /// tau == threshold: no contraction lowers tau.
  Status claim2 = Status::NotApplicable;
  /// tau > threshold: some contraction lowers tau.
  Status claim3 = Status::NotApplicable;
  std::optional<Edge> dropping_edge;
  int edges_checked = 0;
  int edges_total = 0;
  /// The edges examined when sampling was requested.
  std::vector<Edge> sample;
};

ClaimsReport verify_claims(const CleanFormula& phi, const GadgetInstance& inst, const HitFamily& family,
                           const ClaimsOptions& options = {});

/// key=value lines.
std::string format_report(const ClaimsReport& report);

}  // namespace cblock
