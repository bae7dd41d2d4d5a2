#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "xiform/matrix.hpp"

namespace xiform::cli {

/// A square matrix together with the field its entries were parsed in.
///
/// JSON form:  {"field": "Q", "rows": [["0", "1"], ["-1", "0"]]}
/// Text form:  first line "n field", then n whitespace-separated rows.
/// Entries are strings ("-3", "2/7", "4"); integer JSON numbers are accepted on input.
struct MatrixDocument {
  Matrix matrix;

  [[nodiscard]] Field field() const noexcept { return matrix.field(); }
};

/// Detects JSON (first non-blank character '{') or the text form. Throws ParseError.
[[nodiscard]] MatrixDocument parse_document(std::string_view text);
[[nodiscard]] MatrixDocument parse_json_document(const nlohmann::json& j);
[[nodiscard]] MatrixDocument parse_text_document(std::string_view text);

/// Reads a whole file, or standard input for "-".
[[nodiscard]] MatrixDocument read_document(const std::string& path, std::istream& stdin_stream);

[[nodiscard]] nlohmann::json rows_json(const Matrix& m);
[[nodiscard]] nlohmann::json document_json(const Matrix& m);
[[nodiscard]] std::string to_text(const Matrix& m);

}  // namespace xiform::cli
