#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicycle {

/// Malformed arguments: dimension mismatches, out-of-range coordinates,
/// non-bijective permutations, invalid q-bases.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix text that could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration oracle refused to run because its input exceeds the cap.
class CapError : public std::runtime_error {
 public:
  CapError(const std::string& oracle, std::size_t size, std::size_t cap)
      : std::runtime_error(oracle + ": size " + std::to_string(size) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An invariant was requested outside the domain where it is defined.
class UndefinedInvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Graph isomorphism could not be decided within the search cap.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bicycle
