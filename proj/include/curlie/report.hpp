#pragma once

#include <string>
#include <vector>

namespace curlie {

/// One asserted identity. `degree` is -1 when the check is not per-degree.
struct Check {
  std::string name;
  int degree = -1;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  std::vector<Check> checks;
  /// Set when a precondition failed and the conclusion was not examined.
  bool hypothesis_failed = false;
  std::string hypothesis_detail;

  bool passed() const {
    if (hypothesis_failed) return false;
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  void add(std::string name, int degree, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), degree, ok, std::move(detail)});
  }
  void append(const VerificationReport& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + "/" + c.name, c.degree, c.passed, c.detail});
    if (other.hypothesis_failed && !hypothesis_failed) {
      hypothesis_failed = true;
      hypothesis_detail = other.hypothesis_detail;
    }
  }
};

}  // namespace curlie
