#pragma once

#include <stdexcept>
#include <string>

namespace hypercolor {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Exhaustive searches are NP-hard in general; a node budget makes them
// fail loudly instead of hanging.
struct BudgetExceededError : std::runtime_error {
  long long budget;
  explicit BudgetExceededError(long long b)
      : std::runtime_error("search budget of " + std::to_string(b) + " nodes exceeded"),
        budget(b) {}
};

}  // namespace hypercolor
