#include "cblock/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "cblock/errors.hpp"

namespace cblock {

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error([&] {
        std::string msg = "formula is not clean:";
        for (const auto& v : violations) msg += "\n  " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

std::string literal_name(const Literal& l) { return (l.positive ? "" : "-") + std::to_string(l.var + 1); }

}  // namespace

std::vector<std::string> clean_violations(int n, const std::vector<Clause>& clauses) {
  std::vector<std::string> out;
  if (n < 1) out.push_back("formula has no variables");
  std::vector<int> count(static_cast<std::size_t>(std::max(n, 0)), 0);
  std::vector<int> positive(count.size(), 0);
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const Clause& clause = clauses[c];
    const std::string where = "clause " + std::to_string(c + 1);
    if (clause.size() < 2 || clause.size() > 3) {
      out.push_back(where + " has " + std::to_string(clause.size()) + " literals (expected 2 or 3)");
    }
    std::set<int> vars;
    for (const Literal& l : clause) {
      if (l.var < 0 || l.var >= n) {
        out.push_back(where + " uses variable " + std::to_string(l.var + 1) + " outside 1.." + std::to_string(n));
        continue;
      }
      if (!vars.insert(l.var).second) {
        out.push_back(where + " repeats variable " + std::to_string(l.var + 1));
      }
      ++count[l.var];
      if (l.positive) ++positive[l.var];
    }
  }
  for (int v = 0; v < n; ++v) {
    const std::string name = "variable " + std::to_string(v + 1);
    if (count[v] != 3) out.push_back(name + " occurs " + std::to_string(count[v]) + " times (expected 3)");
    if (positive[v] == 0) out.push_back(name + " never occurs positively");
    if (positive[v] == count[v]) out.push_back(name + " never occurs negatively");
  }
  return out;
}

CleanFormula::CleanFormula(int n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {
  auto violations = clean_violations(n_, clauses_);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

CleanFormula parse_cnf(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::istringstream tokens{std::string(line)};
    std::string token;
    if (!(tokens >> token) || token == "c" || token.front() == 'c' || token == "%") {
      if (end == text.size()) break;
      continue;
    }
    if (token == "p") {
      if (have_header) throw ParseError(line_no, "second problem line");
      std::string format;
      std::string extra;
      if (!(tokens >> format >> n >> m) || format != "cnf" || (tokens >> extra) || n < 0 || m < 0) {
        throw ParseError(line_no, "malformed header: expected \"p cnf <variables> <clauses>\"");
      }
      have_header = true;
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before the \"p cnf\" line");
    do {
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "expected a literal, got '" + token + "'");
      }
      if (value == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(value) > n) throw ParseError(line_no, "literal " + token + " exceeds the variable count");
      current.push_back(Literal{static_cast<int>(std::llabs(value)) - 1, value > 0});
    } while (tokens >> token);
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing \"p cnf\" line");
  if (!current.empty()) throw ParseError(line_no, "last clause is not terminated by 0");
  if (static_cast<long long>(clauses.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " clauses, found " + std::to_string(clauses.size()));
  }
  return CleanFormula(static_cast<int>(n), std::move(clauses));
}

CleanFormula read_cnf(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cnf(buffer.str());
}

CleanFormula read_cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_cnf(in);
}

std::string serialize_cnf(const CleanFormula& phi) {
  std::string out = "p cnf " + std::to_string(phi.variables()) + " " + std::to_string(phi.clause_count()) + "\n";
  for (const Clause& clause : phi.clauses()) {
    for (const Literal& l : clause) out += literal_name(l) + " ";
    out += "0\n";
  }
  return out;
}

CleanFormula phi0() {
  return CleanFormula(2, {{{0, true}, {1, true}}, {{0, true}, {1, false}}, {{0, false}, {1, true}}});
}

std::optional<std::vector<bool>> brute_force_sat(const CleanFormula& phi) {
  const int n = phi.variables();
  if (n > 30) throw DomainError("brute_force_sat: too many variables");
  // Bit v of `mask` set means variable v is true; masks ascend from all-false.
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const bool ok = std::all_of(phi.clauses().begin(), phi.clauses().end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return (((mask >> l.var) & 1UL) != 0) == l.positive; });
    });
    if (!ok) continue;
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) assignment[v] = ((mask >> v) & 1UL) != 0;
    return assignment;
  }
  return std::nullopt;
}

namespace {

using Shape = std::vector<Clause>;

Shape canonical(const Shape& clauses, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Shape best;
  bool first = true;
  do {
    Shape mapped = clauses;
    for (Clause& c : mapped) {
      for (Literal& l : c) l.var = perm[l.var];
      std::sort(c.begin(), c.end());
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

class CleanEnumerator {
 public:
  explicit CleanEnumerator(int n) : n_(n) {
    for (int v = 0; v < n; ++v) {
      occurrences_.push_back({v, true});
      occurrences_.push_back({v, true});
      occurrences_.push_back({v, false});
    }
    used_.assign(occurrences_.size(), 0);
  }

  std::set<Shape> run() {
    grow();
    return std::move(found_);
  }

 private:
  void grow() {
    const auto first = std::find(used_.begin(), used_.end(), 0);
    if (first == used_.end()) {
      found_.insert(canonical(current_, n_));
      return;
    }
    const std::size_t i = static_cast<std::size_t>(first - used_.begin());
    used_[i] = 1;
    for (std::size_t j = i + 1; j < occurrences_.size(); ++j) {
      if (used_[j] || occurrences_[j].var == occurrences_[i].var) continue;
      used_[j] = 1;
      current_.push_back({occurrences_[i], occurrences_[j]});
      grow();
      current_.pop_back();
      for (std::size_t k = j + 1; k < occurrences_.size(); ++k) {
        if (used_[k] || occurrences_[k].var == occurrences_[i].var || occurrences_[k].var == occurrences_[j].var) {
          continue;
        }
        used_[k] = 1;
        current_.push_back({occurrences_[i], occurrences_[j], occurrences_[k]});
        grow();
        current_.pop_back();
        used_[k] = 0;
      }
      used_[j] = 0;
    }
    used_[i] = 0;
  }

  int n_;
  std::vector<Literal> occurrences_;
  std::vector<char> used_;
  Shape current_;
  std::set<Shape> found_;
};

}  // namespace

std::vector<CleanFormula> enumerate_clean_formulas(int n) {
  if (n < 1 || n > 6) throw DomainError("enumerate_clean_formulas: n must be in 1..6");
  std::vector<CleanFormula> out;
  for (const Shape& shape : CleanEnumerator(n).run()) out.emplace_back(n, shape);
  return out;
}

}  // namespace cblock
