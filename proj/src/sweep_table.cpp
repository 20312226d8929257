// SPDX-License-Identifier: Apache-2.0
//
// nfdof: spatial bandwidth and degrees of freedom of near-field linear arrays
// Copyright (C) 2026 The nfdof authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nfdof/sweep_table.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <stdexcept>

namespace nfdof
{
    SweepTable::SweepTable(std::string command, std::vector<Column> columns)
        : command_(std::move(command)), columns_(std::move(columns))
    {
        if (columns_.empty())
            throw std::invalid_argument("SweepTable: no columns");
    }

    void SweepTable::add_row(std::vector<double> row)
    {
        if (row.size() != columns_.size())
            throw std::invalid_argument("SweepTable: row has " + std::to_string(row.size()) + " values, expected " +
                                        std::to_string(columns_.size()));
        rows_.push_back(std::move(row));
    }

    std::size_t SweepTable::column_index(const std::string &name) const
    {
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (columns_[i].name == name)
                return i;
        throw std::out_of_range("SweepTable: no column " + name);
    }

    std::string format_real(double x)
    {
        if (x == 0.0)
            return "0"; // also folds -0
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }

    std::string utc_timestamp()
    {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    void SweepTable::write_csv(std::ostream &out, std::optional<std::string> timestamp) const
    {
        out << "# " << tool_version << " " << command_ << '\n';
        for (const auto &line : provenance_)
            out << "# " << line << '\n';
        if (timestamp)
            out << "# generated: " << *timestamp << '\n';
        out << "# units: angles in radians, lengths in wavelengths, bandwidth as omega/k0\n";
        for (const auto &c : columns_)
            out << "# column " << c.name << ": " << c.description << '\n';

        for (std::size_t i = 0; i < columns_.size(); ++i)
            out << (i ? "," : "") << columns_[i].name;
        out << '\n';
        for (const auto &row : rows_)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_real(row[i]);
            out << '\n';
        }
    }
}
