#pragma once

#include <stdexcept>
#include <string>

namespace tonelab {

/// Malformed graph, coloring or Latin-square text. `line` is 1-based, 0 when
/// the problem is not tied to one line (e.g. a missing record).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tonelab
