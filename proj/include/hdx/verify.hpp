#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdx/gf2.hpp"
#include "hdx/serialize.hpp"

namespace hdx {

struct VerifyOptions {
  std::size_t trials = 0;  ///< 0 selects each suite's default
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  bool informational = false;  ///< reported, never counted as a failure
  Json detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  Json to_json() const;
};

std::vector<std::string> verify_suite_names();
/// Runs one suite, or every suite for "all". Throws InvalidArgument for an
/// unknown name.
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace hdx
