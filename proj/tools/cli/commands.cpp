#include "xiform_cli/commands.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "xiform/blocks.hpp"
#include "xiform/decide.hpp"
#include "xiform/errors.hpp"

namespace xiform::cli {

namespace {

std::string list_text(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be a positive integer, got '" + s + "'");
  }
  if (pos != s.size() || v == 0 || s[0] == '-') throw ParseError(std::string(what) + " must be a positive integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

Poly parse_monic(const std::string& coeffs, Field f) {
  std::vector<Scalar> highest_first;
  std::stringstream ss(coeffs);
  for (std::string tok; std::getline(ss, tok, ',');) highest_first.push_back(Scalar::parse(f, tok));
  if (highest_first.size() < 2) throw ParseError("polynomial needs degree >= 1, got '" + coeffs + "'");
  if (!highest_first.front().is_one()) throw ParseError("polynomial must be monic (leading coefficient 1)");
  return Poly(f, std::vector<Scalar>(highest_first.rbegin(), highest_first.rend()));
}

void require_params(const std::vector<std::string>& params, std::size_t min, std::size_t max, const std::string& usage) {
  if (params.size() < min || params.size() > max) throw ParseError("usage: blocks " + usage);
}

void print_matrix_block(std::ostream& out, const std::string& label, const Matrix& m) {
  out << label << ":";
  if (m.rows() == 0) {
    out << " []\n";
    return;
  }
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

}  // namespace

nlohmann::json report_json(const Matrix& m, const XiReport& report, bool include_regularization) {
  nlohmann::json j;
  j["verdict"] = to_string(report.verdict);
  j["method"] = to_string(report.method);
  j["field"] = m.field().name();
  j["n"] = m.rows();
  j["singular_sizes"] = report.singular_sizes;
  j["rank_sequence"] = report.rank_sequence;
  j["odd_block_counts"] = report.odd_block_counts;
  j["gamma_used"] = report.gamma_used ? nlohmann::json(report.gamma_used->to_string()) : nlohmann::json(nullptr);
  if (report.certificate) {
    j["certificate"] = {{"rows", rows_json(*report.certificate)},
                        {"verified", verify_certificate(m, *report.certificate)}};
  } else {
    j["certificate"] = nullptr;
  }
  if (include_regularization && report.regularization) {
    j["regularization"] = {{"transform", rows_json(report.regularization->transform)},
                           {"regular_part", rows_json(report.regularization->regular_part)},
                           {"singular_sizes", report.regularization->singular_sizes}};
  } else {
    j["regularization"] = nullptr;
  }
  return j;
}

int cmd_decide(const MatrixDocument& doc, const DecideFlags& flags, std::ostream& out, std::ostream& err) {
  const Matrix& m = doc.matrix;
  XiReport report;
  try {
    if (flags.method == "auto") {
      report = decide(m);
    } else if (flags.method == "regularize") {
      report = decide(m, DecideOptions{.use_fast_path = false});
    } else if (flags.method == "gamma-shift") {
      try {
        report = decide_gamma_shift(m);
      } catch (const GammaExhausted& e) {
        if (!flags.fallback) {
          err << "error: " << e.what() << " (use --fallback or --method auto)\n";
          return kUsageError;
        }
        report = decide(m);
      }
    } else {
      err << "error: unknown method '" << flags.method << "'\n";
      return kUsageError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (flags.emit_regularization && !report.regularization) report.regularization = regularize(m);

  if (flags.json) {
    out << report_json(m, report, flags.emit_regularization).dump(2) << '\n';
  } else {
    out << "verdict: " << to_string(report.verdict) << '\n'
        << "method: " << to_string(report.method) << '\n'
        << "field: " << m.field().name() << '\n'
        << "n: " << m.rows() << '\n'
        << "singular_sizes: " << list_text(report.singular_sizes) << '\n'
        << "rank_sequence: " << list_text(report.rank_sequence) << '\n'
        << "odd_block_counts: " << list_text(report.odd_block_counts) << '\n'
        << "gamma_used: " << (report.gamma_used ? report.gamma_used->to_string() : "none") << '\n';
    if (flags.certificate) {
      if (report.certificate) {
        out << "certificate: " << *report.certificate << ' '
            << (verify_certificate(m, *report.certificate) ? "VERIFIED" : "FAILED") << '\n';
      } else {
        out << "certificate: none\n";
      }
    }
    if (flags.emit_regularization && report.regularization) {
      print_matrix_block(out, "transform", report.regularization->transform);
      print_matrix_block(out, "regular_part", report.regularization->regular_part);
    }
  }
  return report.verdict == Verdict::in_xi ? kInXi : kNotInXi;
}

int cmd_blocks(const std::string& kind, const std::vector<std::string>& params, Field field, Format format,
               std::istream& in, std::ostream& out, std::ostream& err) {
  Matrix result;
  try {
    if (kind == "jordan") {
      require_params(params, 2, 2, "jordan <r> <lambda>");
      result = jordan(parse_size(params[0], "r"), Scalar::parse(field, params[1]));
    } else if (kind == "gamma") {
      require_params(params, 1, 1, "gamma <r>");
      result = gamma(parse_size(params[0], "r"), field);
    } else if (kind == "frobenius" || kind == "skewsum") {
      require_params(params, 1, 2, kind + " <coefficients> [power]");
      const unsigned power = params.size() == 2 ? static_cast<unsigned>(parse_size(params[1], "power")) : 1u;
      const PolySpec spec(parse_monic(params[0], field), power);
      result = frobenius(spec);
      if (kind == "skewsum") result = skew_sum(result, Matrix::identity(result.rows(), field));
    } else if (kind == "directsum") {
      std::vector<Matrix> parts;
      for (const auto& path : params) parts.push_back(read_document(path, in).matrix);
      result = direct_sum(parts, field);
    } else if (kind == "symplectic") {
      require_params(params, 1, 1, "symplectic <m>");
      result = symplectic_unit(parse_size(params[0], "m"), field);
    } else {
      err << "error: unknown block kind '" << kind << "' (jordan, gamma, frobenius, skewsum, directsum, symplectic)\n";
      return kUsageError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (format == Format::json)
    out << document_json(result).dump() << '\n';
  else
    out << to_text(result);
  return 0;
}

int cmd_oracle(const MatrixDocument& doc, const OracleFlags& flags, std::ostream& out, std::ostream& err) {
  IsometrySummary summary;
  try {
    summary = enumerate_isometries(doc.matrix, flags.limit, flags.threads);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const Verdict verdict = summary.all_det_one ? Verdict::in_xi : Verdict::not_in_xi;
  if (flags.json) {
    nlohmann::json dets = nlohmann::json::object();
    for (const auto& [d, c] : summary.det_values) dets[std::to_string(d)] = c;
    out << nlohmann::json{{"field", doc.field().name()},
                          {"n", doc.matrix.rows()},
                          {"group_order", summary.group_order},
                          {"det_values", dets},
                          {"all_det_one", summary.all_det_one},
                          {"verdict", to_string(verdict)}}
               .dump(2)
        << '\n';
  } else {
    out << "group_order: " << summary.group_order << '\n' << "det_values:";
    for (const auto& [d, c] : summary.det_values) out << ' ' << d << 'x' << c;
    out << '\n'
        << "all_det_one: " << (summary.all_det_one ? "true" : "false") << '\n'
        << "verdict: " << to_string(verdict) << '\n';
  }
  return verdict == Verdict::in_xi ? kInXi : kNotInXi;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"xiform: decide whether every isometry of a bilinear form has determinant 1"};
  app.require_subcommand(1);

  std::string input = "-";
  DecideFlags decide_flags;
  auto* decide_cmd = app.add_subcommand("decide", "Decide membership and print the invariants");
  decide_cmd->add_option("input", input, "Matrix document (JSON or text), '-' for stdin")->capture_default_str();
  decide_cmd->add_option("--method", decide_flags.method, "auto | regularize | gamma-shift")
      ->check(CLI::IsMember({"auto", "regularize", "gamma-shift"}))
      ->capture_default_str();
  decide_cmd->add_flag("--certificate", decide_flags.certificate, "Print the det -1 isometry when one is built");
  decide_cmd->add_flag("--emit-regularization", decide_flags.emit_regularization, "Print S and B of the reduction");
  decide_cmd->add_flag("--json", decide_flags.json, "Machine-readable report");
  decide_cmd->add_flag("--fallback", decide_flags.fallback, "gamma-shift: fall back to regularization when no gamma exists");

  std::string kind;
  std::vector<std::string> params;
  std::string field_name = "Q";
  std::string format_name = "json";
  auto* blocks_cmd = app.add_subcommand("blocks", "Emit a canonical block as a matrix document");
  blocks_cmd->add_option("kind", kind, "jordan | gamma | frobenius | skewsum | directsum | symplectic")->required();
  blocks_cmd->add_option("params", params, "Kind-specific parameters");
  blocks_cmd->add_option("--field", field_name, "Q or F<p>")->capture_default_str();
  blocks_cmd->add_option("--format", format_name, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  OracleFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate the isometry group over a small prime field");
  oracle_cmd->add_option("input", input, "Matrix document (JSON or text), '-' for stdin")->capture_default_str();
  oracle_cmd->add_flag("--json", oracle_flags.json, "Machine-readable summary");
  oracle_cmd->add_option("--limit", oracle_flags.limit, "Maximum p^(n^2) to scan")->capture_default_str();
  oracle_cmd->add_option("--threads", oracle_flags.threads, "Worker threads, 0 = all cores")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*blocks_cmd) {
      const Field f = Field::parse(field_name);
      return cmd_blocks(kind, params, f, format_name == "json" ? Format::json : Format::text, in, out, err);
    }
    const MatrixDocument doc = read_document(input, in);
    if (*decide_cmd) return cmd_decide(doc, decide_flags, out, err);
    return cmd_oracle(doc, oracle_flags, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace xiform::cli
