#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homvec {

// Malformed graph text. `offset` is the byte (graph6) or line (edge list)
// where decoding failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A computation would exceed its configured size budget.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, double requested, double budget)
      : std::runtime_error(what + ": requested " + fmt_num(requested) + ", budget " +
                           fmt_num(budget)),
        requested_(requested),
        budget_(budget) {}

  double requested() const noexcept { return requested_; }
  double budget() const noexcept { return budget_; }

 private:
  static std::string fmt_num(double x) {
    if (x < 1e15) return std::to_string(static_cast<unsigned long long>(x));
    return std::to_string(x);
  }
  double requested_;
  double budget_;
};

// Caller broke a documented precondition (non-tree passed to hom_tree,
// invalid decomposition, differing walk fingerprints, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace homvec
