#pragma once

#include <stdexcept>
#include <string>

namespace vfree {

// Malformed input: unparsable files, unknown letters, bad table shapes.
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally well-formed input that violates a mathematical requirement
// (non-group table, non-injective embedding, disconnected graph, ...).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration outgrew its configured element budget.  Never truncate
// silently; the oracle's answers would stop being ground truth.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vfree
