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

#ifndef NFDOF_SWEEP_TABLE_HPP
#define NFDOF_SWEEP_TABLE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nfdof
{
    inline constexpr const char *tool_version = "nfdof 0.1.0";

    struct Column
    {
        std::string name;
        std::string description; // meaning and unit, written to the comment block
    };

    // Rectangular table of reals with a provenance comment block.
    class SweepTable
    {
    public:
        SweepTable(std::string command, std::vector<Column> columns);

        void add_row(std::vector<double> row);
        void add_provenance(std::string line) { provenance_.push_back(std::move(line)); }

        const std::string &command() const { return command_; }
        const std::vector<Column> &columns() const { return columns_; }
        const std::vector<std::vector<double>> &rows() const { return rows_; }
        std::size_t column_index(const std::string &name) const;

        // CSV: '#' comment block, one header line, LF endings, 17 significant
        // digits. The timestamp line is the only part that varies between runs.
        void write_csv(std::ostream &out, std::optional<std::string> timestamp = std::nullopt) const;

    private:
        std::string command_;
        std::vector<Column> columns_;
        std::vector<std::vector<double>> rows_;
        std::vector<std::string> provenance_;
    };

    std::string format_real(double x);
    std::string utc_timestamp();
}

#endif
