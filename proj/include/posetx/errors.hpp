#pragma once

#include <stdexcept>
#include <string>

namespace posetx {

/// Transitive closure of the generator pairs relates two distinct points
/// in both directions.
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cross relation between two posets violates its closure condition.
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation that requires a pairwise-incomparable subset got something else.
struct NotAntichainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed the configured candidate budget.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A catalog lookup hit an isomorphism class that is not in the catalog.
struct IncompleteCatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The alleged extension does not induce the base poset or has the wrong
/// set of minimal points.
struct NotAnExtensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

}  // namespace posetx
