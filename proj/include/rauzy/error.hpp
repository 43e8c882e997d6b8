#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rauzy {

/// Malformed text input (pairs, cycle notation, switch paths, rules, caches).
/// `column()` is a 1-based character offset, or a 1-based line number for
/// cache files.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " (at " + std::to_string(column) + ")"),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// An enumeration hit its member budget before closing.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t members, std::size_t frontier)
      : std::runtime_error(what + ": budget exceeded with " + std::to_string(members) +
                           " members, frontier " + std::to_string(frontier)),
        members_(members),
        frontier_(frontier) {}

  std::size_t members() const noexcept { return members_; }
  std::size_t frontier() const noexcept { return frontier_; }

 private:
  std::size_t members_;
  std::size_t frontier_;
};

/// A brute-force routine was asked to run past its hard size cap.
class CapExceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rauzy
