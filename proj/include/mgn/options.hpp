#pragma once

#include <string>
#include <vector>

namespace mgn {

/// Switches that substitute the literally printed variant of three formulas
/// for the corrected one. They exist so the self-test can demonstrate that
/// each printed variant is detected; production code leaves them all off.
struct FormulaOptions {
  /// Connected-monodromy factor prod_{p|L} (1 - p^{2h}) instead of (1 - p^{-2h}).
  bool printed_monodromy_exponent = false;
  /// Quotient genus h = (1 - sum_j k_j) / 2 instead of (2 - sum_j k_j) / 2.
  bool printed_quotient_genus = false;
  /// chi^orb of the quotient stratum as (-1)^s (2g-1) B_{2g} / (2g-3)!.
  bool printed_orbifold_euler = false;

  bool any() const {
    return printed_monodromy_exponent || printed_quotient_genus || printed_orbifold_euler;
  }
};

/// Names accepted by enable_printed_form: "monodromy", "genus", "orbchi".
std::vector<std::string> printed_form_names();
void enable_printed_form(FormulaOptions& options, const std::string& name);

}  // namespace mgn
