// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsolink {

// Rectangular result set with a units row and a '#'-prefixed metadata
// preamble. Serialization is byte-deterministic: no timestamps, fixed
// number formatting, fixed row order as inserted.
struct ResultTable {
    std::string subcommand;
    std::string config_hash;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string irs_note; // technology / control-resolution line, optional

    std::vector<std::string> columns;
    std::vector<std::string> units;
    std::vector<std::vector<std::string>> rows;
};

// %.10g, the one formatting used for every numeric cell.
std::string format_number(double v);

// Appends a row; throws std::invalid_argument when the width does not match
// the column count or a cell contains a comma or newline.
void add_row(ResultTable &table, std::vector<std::string> cells);

std::string to_csv(const ResultTable &table);

// Writes to_csv output to the path ("-" = stdout). Throws IoError on
// failure.
void write_csv(const ResultTable &table, const std::string &path);

} // namespace fsolink
