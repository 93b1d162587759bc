#include "mgn/options.hpp"

#include "mgn/error.hpp"

namespace mgn {

std::vector<std::string> printed_form_names() { return {"monodromy", "genus", "orbchi"}; }

void enable_printed_form(FormulaOptions& options, const std::string& name) {
  if (name == "monodromy") {
    options.printed_monodromy_exponent = true;
  } else if (name == "genus") {
    options.printed_quotient_genus = true;
  } else if (name == "orbchi") {
    options.printed_orbifold_euler = true;
  } else {
    throw DomainError("unknown printed form \"" + name + "\" (expected monodromy, genus or orbchi)");
  }
}

}  // namespace mgn
