#pragma once

// Text and JSON formats for matrices and codes.
//
// Matrix text format:
//   line 1      "<t> <n>"  (decimal, one space)
//   lines 2..   exactly t rows of exactly n characters from {0,1};
//               row i character j is the entry of item j in test i.
// Lines end in LF; no trailing blanks. JSON: {"t":..,"n":..,"rows":[..]}.
//
// Code text format:
//   line 1      "<t> <n> <q>"
//   lines 2..   n words, each t space-separated decimal symbols.
// JSON: {"t":..,"n":..,"q":..,"words":[[..],..]}.

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ssm/matrix.hpp"
#include "ssm/ssc.hpp"

namespace ssm {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

BinaryMatrix read_matrix(std::string_view text);
std::string write_matrix(const BinaryMatrix& m);

nlohmann::ordered_json matrix_to_json(const BinaryMatrix& m);
BinaryMatrix matrix_from_json(const nlohmann::json& j);

QaryCode read_code(std::string_view text);
std::string write_code(const QaryCode& code);

nlohmann::ordered_json code_to_json(const QaryCode& code);
QaryCode code_from_json(const nlohmann::json& j);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace ssm
