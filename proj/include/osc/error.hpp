#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace osc {

// Malformed user input (files, flags, initial data).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
  InputError(const std::string& what, std::vector<std::string> issues)
      : std::runtime_error(what), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// An equation that violates the direction or sign constraints of its class.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// An operation whose preconditions exclude the given equation.
class NotApplicable : public std::logic_error {
 public:
  explicit NotApplicable(const std::string& what) : std::logic_error(what) {}
};

}  // namespace osc
