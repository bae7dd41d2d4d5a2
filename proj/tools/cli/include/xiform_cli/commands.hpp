#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xiform/oracle.hpp"
#include "xiform_cli/document.hpp"

namespace xiform::cli {

/// Exit codes shared by decide and oracle.
enum ExitCode : int { kInXi = 0, kNotInXi = 1, kUsageError = 2 };

enum class Format { json, text };

struct DecideFlags {
  std::string method = "auto";  ///< auto | regularize | gamma-shift
  bool certificate = false;
  bool emit_regularization = false;
  bool json = false;
  /// With gamma-shift: run the regularization path when no gamma exists.
  bool fallback = false;
};

struct OracleFlags {
  bool json = false;
  std::uint64_t limit = default_enumeration_limit;
  unsigned threads = 0;
};

[[nodiscard]] int cmd_decide(const MatrixDocument& doc, const DecideFlags& flags, std::ostream& out, std::ostream& err);

/// kind: jordan r lambda | gamma r | frobenius COEFFS l | skewsum COEFFS l |
///       directsum FILE... | symplectic m.
/// COEFFS lists the monic polynomial highest degree first, comma separated: "1,-1" is x - 1.
[[nodiscard]] int cmd_blocks(const std::string& kind, const std::vector<std::string>& params, Field field,
                             Format format, std::istream& in, std::ostream& out, std::ostream& err);

[[nodiscard]] int cmd_oracle(const MatrixDocument& doc, const OracleFlags& flags, std::ostream& out, std::ostream& err);

/// The JSON report emitted by `decide --json`.
[[nodiscard]] nlohmann::json report_json(const Matrix& m, const XiReport& report, bool include_regularization);

/// Full command-line entry point (argv[0] is the program name).
[[nodiscard]] int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace xiform::cli
