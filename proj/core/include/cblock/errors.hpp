#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cblock {

/// Input text that does not follow one of the accepted file formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An argument that violates an operation's precondition (edge not in the
/// graph, non-bipartite input where a bipartite one is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A CNF formula that is well formed but not clean. Carries every violated
/// condition, not just the first one found.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace cblock
