#include "xiform_cli/document.hpp"

#include <fstream>
#include <sstream>

#include "xiform/errors.hpp"

namespace xiform::cli {

namespace {

MatrixDocument from_entries(Field f, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n) + " (matrix must be square)");
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Scalar::parse(f, rows[i][j]));
  }
  return {std::move(m)};
}

}  // namespace

MatrixDocument parse_json_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("field") || !j["field"].is_string()) throw ParseError("document needs a string \"field\"");
  if (!j.contains("rows") || !j["rows"].is_array()) throw ParseError("document needs an array \"rows\"");
  const Field f = Field::parse(j["field"].get<std::string>());
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& e : row) {
      if (e.is_string())
        out.push_back(e.get<std::string>());
      else if (e.is_number_integer())
        out.push_back(std::to_string(e.get<long long>()));
      else
        throw ParseError("entries must be strings or integers");
    }
  }
  return from_entries(f, rows);
}

MatrixDocument parse_text_document(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty document");
  std::istringstream header(line);
  long long n = -1;
  std::string field_name, extra;
  if (!(header >> n >> field_name) || n < 0 || (header >> extra))
    throw ParseError("text header must be \"n field\", got '" + line + "'");
  const Field f = Field::parse(field_name);
  std::vector<std::vector<std::string>> rows;
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    std::istringstream row(line);
    auto& out = rows.emplace_back();
    for (std::string tok; row >> tok;) out.push_back(tok);
  }
  if (next_line()) throw ParseError("trailing content after " + std::to_string(n) + " rows");
  return from_entries(f, rows);
}

MatrixDocument parse_document(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw ParseError("empty document");
  if (text[start] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_json_document(j);
  }
  return parse_text_document(text);
}

MatrixDocument read_document(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << stdin_stream.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return parse_document(buffer.str());
}

nlohmann::json rows_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json document_json(const Matrix& m) { return {{"field", m.field().name()}, {"rows", rows_json(m)}}; }

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.field().name() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace xiform::cli
