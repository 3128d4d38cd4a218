#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autorb {

// Group order exceeds the configured enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(unsigned long long order, std::size_t cap)
      : std::runtime_error("group order " + std::to_string(order) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  unsigned long long order() const noexcept { return order_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  unsigned long long order_;
  std::size_t cap_;
};

// A single pair search ran past its backtracking node budget. Distinct from
// a verified "no automorphism exists" answer.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(unsigned long long budget)
      : std::runtime_error("pair search exceeded node budget " +
                           std::to_string(budget)),
        budget_(budget) {}

  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

// Syntax error in a group spec string or generator file. position is a byte
// offset for spec strings and a line number for files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Atom name recognized but the parameters fall outside the supported range.
class UnsupportedParameterError : public ParseError {
 public:
  UnsupportedParameterError(const std::string& what, std::size_t position)
      : ParseError(what, position) {}
};

}  // namespace autorb
