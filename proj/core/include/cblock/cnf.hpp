#pragma once

#include <compare>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cblock {

/// Variable index (0-based) with a sign.
struct Literal {
  int var = 0;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Every violated clean condition of (n, clauses); empty when clean.
/// Clean: each variable occurs exactly three times, at least once with each
/// sign; every clause has two or three literals over distinct variables.
std::vector<std::string> clean_violations(int n, const std::vector<Clause>& clauses);

/// A validated clean CNF formula.
class CleanFormula {
 public:
  /// Throws ValidationError listing every violation.
  CleanFormula(int n, std::vector<Clause> clauses);

  int variables() const noexcept { return n_; }
  int clause_count() const noexcept { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  friend bool operator==(const CleanFormula&, const CleanFormula&) = default;

 private:
  int n_;
  std::vector<Clause> clauses_;
};

/// DIMACS "p cnf n m" with 0-terminated clauses. Throws ParseError on
/// malformed text and ValidationError when the formula is not clean.
CleanFormula parse_cnf(std::string_view text);
CleanFormula read_cnf(std::istream& in);
CleanFormula read_cnf_file(const std::string& path);
std::string serialize_cnf(const CleanFormula& phi);

/// (x | y)(x | !y)(!x | y).
CleanFormula phi0();

/// A satisfying assignment (index = variable) found by trying all 2^n, or nullopt.
std::optional<std::vector<bool>> brute_force_sat(const CleanFormula& phi);

/// Every clean formula on exactly n variables, one per class under variable
/// renaming, per-variable sign flips and clause reordering. Representatives
/// have each variable's majority sign positive.
std::vector<CleanFormula> enumerate_clean_formulas(int n);

}  // namespace cblock
