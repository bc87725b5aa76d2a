#ifndef PARAFACT_ERRORS_HPP
#define PARAFACT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parafact {

// Malformed presentation/quiver/word input. Line and column are 1-based;
// both are 0 for strings that did not come from a file (e.g. --word args).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, int line = 0, int column = 0)
      : std::runtime_error(format(msg, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  int line_;
  int column_;
};

// An enumeration or closure hit its configured bound. `allocated` reports
// how many cosets (or permutations, or words) existed at abort.
class LimitExceeded : public std::runtime_error {
public:
  LimitExceeded(std::string msg, std::size_t allocated)
      : std::runtime_error(std::move(msg)), allocated_(allocated) {}

  std::size_t allocated() const { return allocated_; }

private:
  std::size_t allocated_;
};

// The greedy factorisation loop stopped on an element outside the upper
// set. Cannot happen when the presentation satisfies the involution and
// even-length conditions; the Klein fixture triggers it.
class NoDescentButNotUpper : public std::runtime_error {
public:
  explicit NoDescentButNotUpper(std::string msg)
      : std::runtime_error(std::move(msg)) {}
};

// A quiver outside the supported fragment (paths, single arrows, oriented
// 3-cycles, disjoint unions of those).
class UnsupportedQuiver : public std::runtime_error {
public:
  explicit UnsupportedQuiver(std::string msg)
      : std::runtime_error(std::move(msg)) {}
};

}  // namespace parafact

#endif
