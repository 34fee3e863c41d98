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

#ifndef POSETOP_IO_HPP_
#define POSETOP_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "posetop/bit_matrix.hpp"
#include "posetop/poset_matrix.hpp"

namespace posetop {

// Accepts the ".pm" text form (order on the first line, then one line of
// 0/1 characters per row) or the JSON form {"n": ..., "rows": [...]},
// told apart by the first non-blank character. Throws ParseError with a
// 1-based line and column.
BitMatrix parse_matrix_text(std::string_view text);
BitMatrix parse_matrix_stream(std::istream& in);
// Throws IoError when the file cannot be read.
BitMatrix parse_matrix_file(const std::string& path);

std::string emit_pm(const BitMatrix& m);
std::string emit_json(const BitMatrix& m);
inline std::string emit_pm(const PosetMatrix& a) { return emit_pm(a.matrix()); }
inline std::string emit_json(const PosetMatrix& a) {
  return emit_json(a.matrix());
}

// Graphviz digraph with nodes 1..n and an edge j -> i for each cover pair
// (i, j), sorted by source then target.
std::string hasse_dot(const PosetMatrix& a);
// Throws IoError when the stream goes bad.
void export_hasse(const PosetMatrix& a, std::ostream& sink);

// Throws IoError when the file cannot be written.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace posetop

#endif  // POSETOP_IO_HPP_
