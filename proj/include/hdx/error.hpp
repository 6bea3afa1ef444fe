#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hdx {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorCode : int {
  kInvalidArgument = 2,
  kBudgetExceeded = 3,
  kHypothesisFailed = 4,
  kInvariantBreach = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
  virtual const char* kind() const noexcept { return "Error"; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::kInvalidArgument, what) {}
  const char* kind() const noexcept override { return "InvalidArgument"; }
};

/// Raised when an exact search would enumerate more than the caller's budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double required, std::uint64_t budget)
      : Error(ErrorCode::kBudgetExceeded, what + " (requires ~" + std::to_string(required) +
                                              ", budget " + std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}
  const char* kind() const noexcept override { return "BudgetExceeded"; }
  double required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  double required_;
  std::uint64_t budget_;
};

/// C^k = B^k (or C_k = B_k): the minimum defining a Cheeger constant is over an empty set.
class DegenerateSpace : public Error {
 public:
  explicit DegenerateSpace(const std::string& what) : Error(ErrorCode::kHypothesisFailed, what) {}
  const char* kind() const noexcept override { return "DegenerateSpace"; }
};

class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(const std::string& what) : Error(ErrorCode::kHypothesisFailed, what) {}
  const char* kind() const noexcept override { return "HypothesisFailed"; }
};

class NotASubcomplex : public Error {
 public:
  explicit NotASubcomplex(const std::string& what) : Error(ErrorCode::kInvalidArgument, what) {}
  const char* kind() const noexcept override { return "NotASubcomplex"; }
};

class InvariantBreach : public Error {
 public:
  explicit InvariantBreach(const std::string& what) : Error(ErrorCode::kInvariantBreach, what) {}
  const char* kind() const noexcept override { return "InvariantBreach"; }
};

inline void check_budget(double required, std::uint64_t budget, const std::string& what) {
  if (required > static_cast<double>(budget)) throw BudgetExceeded(what, required, budget);
}

}  // namespace hdx
