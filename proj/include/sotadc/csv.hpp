/* Copyright 2026 The sotadc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SOTADC_CSV_HPP
#define SOTADC_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sotadc::csv {

// Strict comma-separated tables: one header line, uniform column count,
// plain decimal numbers (no thousands separators, no locale). Every
// diagnostic carries file:line context.

struct Row {
    int line = 0; // 1-based line number in the file
    std::vector<std::string> cells;
};

struct Table {
    std::string path;
    std::vector<std::string> columns;
    std::vector<Row> rows;

    /// Column position by name; throws ParseError if absent.
    int column(const std::string& name) const;

    /// Throws ParseError unless the header is exactly `expected`.
    void require_columns(const std::vector<std::string>& expected) const;
};

Table read_file(const std::filesystem::path& path);
Table parse(const std::string& text, const std::string& path_label);

/// Full-cell strict numeric parses; throw ParseError with file:line:column
/// context on any trailing garbage, empty cell, or range problem.
double parse_double(const Table& table, const Row& row, int col);
std::int64_t parse_int(const Table& table, const Row& row, int col);

/// Shortest representation that round-trips through a double.
std::string format_double(double value);

/// Join cells with commas and a trailing newline.
std::string line(const std::vector<std::string>& cells);

} // namespace sotadc::csv

#endif
