#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mgn/confspace.hpp"
#include "mgn/options.hpp"

namespace mgn::selftest {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First divergence found, empty when passed.
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// nullptr when everything passed.
  const CheckResult* first_failure() const;
};

/// Runs every regression and oracle-equivalence check with the given formula
/// switches. Each check stops at its first divergence and records it.
/// `progress`, when set, is called after every check.
Report run(const FormulaOptions& options = {}, const std::function<void(const CheckResult&)>& progress = {});

/// Finite G-sets used by the configuration-space oracle check: trivial,
/// Z/2, Z/3 and S_3 actions on at most five points.
struct NamedModel {
  std::string name;
  confspace::FiniteModel model;
};
std::vector<NamedModel> standard_models();

}  // namespace mgn::selftest
