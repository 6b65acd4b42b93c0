#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genus {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6 etc). Carries the byte offset of the first
// offending byte within the input string that was handed to the parser.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Well-formed input that violates a domain precondition.
class validation_error : public error {
 public:
  using error::error;
};

// The input encodes a graph that is not connected. Genus distributions are
// only defined here for connected graphs, so this is rejected up front and
// distinguishable from other validation failures.
class disconnected_error : public validation_error {
 public:
  using validation_error::validation_error;
};

// Enumerating the rotation systems of this graph would exceed the configured
// budget. Carries the exact required count (decimal string; it may not fit in
// any machine integer).
class budget_error : public error {
 public:
  budget_error(const std::string& what, std::string required_count)
      : error(what), required_count_(std::move(required_count)) {}

  const std::string& required_count() const { return required_count_; }

 private:
  std::string required_count_;
};

// Root finding did not reach the requested residual within the sweep limit.
// Carries the residuals that were achieved so callers can report them.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, std::vector<double> residuals)
      : error(what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

// Survey checkpoint does not match the catalog / report it claims to resume.
class checkpoint_error : public error {
 public:
  using error::error;
};

// A violated internal invariant. Indicates a bug, never bad user input.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace genus
