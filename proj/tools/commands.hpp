#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgn/error.hpp"
#include "mgn/options.hpp"
#include "mgn/selftest.hpp"
#include "mgn/serialize.hpp"

namespace mgn::cli {

enum class Format { json, csv, latex };
enum class Basis { p, schur };

Format parse_format(const std::string& name);
Basis parse_basis(const std::string& name);

/// Bad arguments or input; the tool exits with status 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct OutputDocument {
  std::string command;
  io::Json arguments;
  io::Json payload;
  Format format = Format::json;
  /// Text bodies for the csv and latex formats.
  std::string csv;
  std::string latex;

  /// The bytes written to stdout.
  std::string render() const;
};

inline constexpr int kDefaultMaxPoints = 10;
inline constexpr int kMaxPointsCap = 30;

OutputDocument cmd_mgn(int genus, int max_points, Basis basis, Format format, bool allow_large = false);
OutputDocument cmd_coeffs(int genus, Format format);
OutputDocument cmd_nfun(std::int64_t k, const std::vector<std::int64_t>& classes, bool verify, Format format);
OutputDocument cmd_orbchi(int h, int s, Format format);
OutputDocument cmd_confspace(const std::string& input_path, int max_points, Basis basis, Format format,
                             bool allow_large = false);
/// Same as cmd_confspace, with the input document already parsed.
OutputDocument cmd_confspace_json(const io::Json& input, int max_points, Basis basis, Format format,
                                  bool allow_large = false);

/// Prints one line per check and the first divergence; returns the exit status.
int cmd_selftest(const FormulaOptions& options, std::ostream& out);

/// 0 success, 1 usage error, 2 computation or invariant failure.
int exit_code_for(const std::exception& e);

}  // namespace mgn::cli
