// SPDX-License-Identifier: Apache-2.0

#include "fsolink/result_table.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "fsolink/errors.hpp"
#include "fsolink/version.hpp"

namespace fsolink {

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void add_row(ResultTable &table, std::vector<std::string> cells)
{
    if (cells.size() != table.columns.size())
        throw std::invalid_argument("add_row: row width does not match column count");
    for (const auto &c : cells)
        if (c.find(',') != std::string::npos || c.find('\n') != std::string::npos)
            throw std::invalid_argument("add_row: cells must not contain commas or newlines");
    table.rows.push_back(std::move(cells));
}

std::string to_csv(const ResultTable &table)
{
    if (table.units.size() != table.columns.size())
        throw std::invalid_argument("to_csv: units row width does not match column count");

    std::string out;
    out += "# ";
    out += kToolName;
    out += " ";
    out += kToolVersion;
    out += "\n# subcommand: " + table.subcommand;
    out += "\n# config_hash: " + table.config_hash;
    out += "\n# seed: " + std::to_string(table.seed);
    out += "\n# workers: " + std::to_string(table.workers);
    if (!table.irs_note.empty())
        out += "\n# irs: " + table.irs_note;
    out += "\n";

    auto line = [&out](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ",";
            out += cells[i];
        }
        out += "\n";
    };
    line(table.columns);
    line(table.units);
    for (const auto &row : table.rows)
        line(row);
    return out;
}

void write_csv(const ResultTable &table, const std::string &path)
{
    std::string text = to_csv(table);
    if (path == "-") {
        std::cout << text;
        if (!std::cout)
            throw IoError("failed to write to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out)
        throw IoError("failed while writing output file: " + path);
}

} // namespace fsolink
