// Copyright 2026 The posetop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetop/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace posetop {

namespace {

using nlohmann::json;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && !lines.back().empty() && lines.back().back() == '\r') {
    lines.back().remove_suffix(1);
  }
  return lines;
}

int parse_order(std::string_view line, int line_no) {
  if (line.empty()) throw ParseError(line_no, 1, "expected the matrix order");
  long value = 0;
  for (std::size_t p = 0; p < line.size(); ++p) {
    const char ch = line[p];
    if (ch < '0' || ch > '9') {
      throw ParseError(line_no, static_cast<int>(p) + 1,
                       "order must be a decimal integer");
    }
    value = value * 10 + (ch - '0');
    if (value > kMaxOrder) {
      throw ParseError(line_no, 1,
                       "order exceeds " + std::to_string(kMaxOrder));
    }
  }
  if (value == 0) throw ParseError(line_no, 1, "order must be positive");
  return static_cast<int>(value);
}

// Row text of length n; reports defects as (column, reason).
void check_row(std::string_view row, int n, int line_no, int column_base) {
  for (std::size_t p = 0; p < row.size() && p < static_cast<std::size_t>(n);
       ++p) {
    if (row[p] != '0' && row[p] != '1') {
      throw ParseError(line_no, column_base + static_cast<int>(p),
                       "expected '0' or '1'");
    }
  }
  if (static_cast<int>(row.size()) < n) {
    throw ParseError(line_no, column_base + static_cast<int>(row.size()),
                     "row too short");
  }
  if (static_cast<int>(row.size()) > n) {
    throw ParseError(line_no, column_base + n, "row too long");
  }
}

BitMatrix parse_pm(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  const int n = parse_order(lines[0], 1);
  std::vector<std::string> rows;
  for (int r = 1; r <= n; ++r) {
    if (r >= static_cast<int>(lines.size())) {
      throw ParseError(r + 1, 1, "missing row " + std::to_string(r));
    }
    check_row(lines[r], n, r + 1, 1);
    rows.emplace_back(lines[r]);
  }
  for (std::size_t extra = n + 1; extra < lines.size(); ++extra) {
    if (!lines[extra].empty()) {
      throw ParseError(static_cast<int>(extra) + 1, 1,
                       "unexpected content after the last row");
    }
  }
  return BitMatrix::from_strings(rows);
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t p = 0; p < offset; ++p) {
    if (text[p] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

BitMatrix parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, column] =
        line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError(1, 1, "JSON matrix must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError(1, 1, "JSON matrix needs an integer field \"n\"");
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError(1, 1, "JSON matrix needs an array field \"rows\"");
  }
  const long n = doc["n"].get<long>();
  if (n < 1 || n > kMaxOrder) {
    throw ParseError(1, 1, "order must be in [1, " +
                               std::to_string(kMaxOrder) + "]");
  }
  const auto& rows_json = doc["rows"];
  if (static_cast<long>(rows_json.size()) != n) {
    throw ParseError(1, 1, "expected " + std::to_string(n) + " rows, got " +
                               std::to_string(rows_json.size()));
  }
  std::vector<std::string> rows;
  for (std::size_t r = 0; r < rows_json.size(); ++r) {
    if (!rows_json[r].is_string()) {
      throw ParseError(1, 1, "row " + std::to_string(r + 1) +
                                 " must be a string");
    }
    const std::string row = rows_json[r].get<std::string>();
    // Rows are located by index; columns count within the row string.
    try {
      check_row(row, static_cast<int>(n), 1, 1);
    } catch (const ParseError& e) {
      throw ParseError(1, e.column(),
                       "row " + std::to_string(r + 1) + ": " + e.reason());
    }
    rows.push_back(row);
  }
  return BitMatrix::from_strings(rows);
}

}  // namespace

BitMatrix parse_matrix_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json(text);
  }
  return parse_pm(text);
}

BitMatrix parse_matrix_stream(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed to read matrix stream");
  return parse_matrix_text(text);
}

BitMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_matrix_stream(in);
}

std::string emit_pm(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (const auto& row : m.row_strings()) out += row + "\n";
  return out;
}

std::string emit_json(const BitMatrix& m) {
  json doc = {{"n", m.rows()}, {"rows", m.row_strings()}};
  return doc.dump();
}

std::string hasse_dot(const PosetMatrix& a) {
  auto edges = cover_relation(a);
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return std::pair(x.second, x.first) < std::pair(y.second, y.first);
  });
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 1; v <= a.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [lower, upper] : edges) {
    out << "  " << upper << " -> " << lower << ";\n";
  }
  out << "}\n";
  return out.str();
}

void export_hasse(const PosetMatrix& a, std::ostream& sink) {
  sink << hasse_dot(a);
  if (!sink) throw IoError("failed to write DOT output");
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("failed to write '" + path + "'");
}

}  // namespace posetop
