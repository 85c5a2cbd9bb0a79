#include "ssm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ssm {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::size_t> parse_header(std::string_view line, std::size_t fields, const char* shape) {
  const std::string bad = std::string("header must be \"") + shape + "\"";
  std::vector<std::size_t> values;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < fields; ++f) {
    if (f > 0) {
      if (pos >= line.size() || line[pos] != ' ') throw ParseError(1, bad);
      ++pos;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + pos) throw ParseError(1, bad);
    pos = static_cast<std::size_t>(ptr - line.data());
    values.push_back(value);
  }
  if (pos != line.size()) throw ParseError(1, bad);
  return values;
}

void reject_trailing_content(const std::vector<std::string_view>& lines, std::size_t used) {
  for (std::size_t k = used; k < lines.size(); ++k)
    if (!lines[k].empty()) throw ParseError(k + 1, "unexpected content after the last row");
}

}  // namespace

BinaryMatrix read_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header");
  const auto header = parse_header(lines[0], 2, "<t> <n>");
  const std::size_t t = header[0], n = header[1];
  if (t == 0 || n == 0) throw ParseError(1, "t and n must be >= 1");
  BinaryMatrix m(t, n);
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t lineno = i + 2;
    if (lineno > lines.size()) throw ParseError(lineno, "expected " + std::to_string(t) + " rows");
    const auto row = lines[i + 1];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != '0' && row[j] != '1')
        throw ParseError(lineno, "column " + std::to_string(j + 1) + ": entry is not 0 or 1");
    if (row.size() != n)
      throw ParseError(lineno, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] == '1') m.set(i, j);
  }
  reject_trailing_content(lines, t + 1);
  return m;
}

std::string write_matrix(const BinaryMatrix& m) {
  std::string out = std::to_string(m.tests()) + " " + std::to_string(m.items()) + "\n";
  out.reserve(out.size() + m.tests() * (m.items() + 1));
  for (std::size_t i = 0; i < m.tests(); ++i) {
    for (std::size_t j = 0; j < m.items(); ++j) out.push_back(m.entry(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

nlohmann::ordered_json matrix_to_json(const BinaryMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.tests(); ++i) {
    std::string row(m.items(), '0');
    for (std::size_t j = 0; j < m.items(); ++j)
      if (m.entry(i, j)) row[j] = '1';
    rows.push_back(std::move(row));
  }
  return {{"t", m.tests()}, {"n", m.items()}, {"rows", std::move(rows)}};
}

BinaryMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto t = j.at("t").get<std::size_t>();
    const auto n = j.at("n").get<std::size_t>();
    const auto rows = j.at("rows").get<std::vector<std::string>>();
    if (rows.size() != t) throw Error("matrix JSON: \"rows\" has " + std::to_string(rows.size()) + " entries, t is " + std::to_string(t));
    for (const auto& r : rows)
      if (r.size() != n) throw Error("matrix JSON: row length differs from n");
    return BinaryMatrix::from_rows(rows);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("matrix JSON: ") + e.what());
  }
}

QaryCode read_code(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header");
  const auto header = parse_header(lines[0], 3, "<t> <n> <q>");
  const std::size_t t = header[0], n = header[1], q = header[2];
  if (t == 0 || n == 0) throw ParseError(1, "t and n must be >= 1");
  if (q < 2 || q > kMaxAlphabet) throw ParseError(1, "q must be in [2, " + std::to_string(kMaxAlphabet) + "]");
  std::vector<std::vector<Symbol>> words;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t lineno = j + 2;
    if (lineno > lines.size()) throw ParseError(lineno, "expected " + std::to_string(n) + " words");
    const auto line = lines[j + 1];
    std::vector<Symbol> w;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
      if (ec != std::errc() || ptr == line.data() + pos) throw ParseError(lineno, "expected a decimal symbol");
      if (value >= q) throw ParseError(lineno, "symbol " + std::to_string(value) + " outside alphabet");
      w.push_back(static_cast<Symbol>(value));
      pos = static_cast<std::size_t>(ptr - line.data());
      if (pos == line.size()) break;
      if (line[pos] != ' ') throw ParseError(lineno, "symbols must be separated by single spaces");
      ++pos;
    }
    if (w.size() != t)
      throw ParseError(lineno, "word has " + std::to_string(w.size()) + " symbols, expected " + std::to_string(t));
    words.push_back(std::move(w));
  }
  reject_trailing_content(lines, n + 1);
  return QaryCode(t, q, std::move(words));
}

std::string write_code(const QaryCode& code) {
  std::ostringstream out;
  out << code.length() << ' ' << code.size() << ' ' << code.alphabet() << '\n';
  for (std::size_t j = 0; j < code.size(); ++j) {
    for (std::size_t i = 0; i < code.length(); ++i) out << (i ? " " : "") << code.symbol(j, i);
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json code_to_json(const QaryCode& code) {
  return {{"t", code.length()}, {"n", code.size()}, {"q", code.alphabet()}, {"words", code.words()}};
}

QaryCode code_from_json(const nlohmann::json& j) {
  try {
    const auto t = j.at("t").get<std::size_t>();
    const auto n = j.at("n").get<std::size_t>();
    const auto q = j.at("q").get<std::size_t>();
    auto words = j.at("words").get<std::vector<std::vector<Symbol>>>();
    if (words.size() != n) throw Error("code JSON: \"words\" size differs from n");
    return QaryCode(t, q, std::move(words));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("code JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ssm
