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

#ifndef NFDOF_ERRORS_HPP
#define NFDOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nfdof
{
    // Observation point (or antenna) lies on the transmit segment, or two points coincide.
    class DegeneratePoint : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Subtended angle is zero where a positive one is required.
    class DegenerateGeometry : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    class InvalidRule : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class NonIntegerGrid : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class CoincidentAntennas : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    class NumericalFailure : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class AllZeroSpectrum : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Scenario document problems. The message carries the JSON field path.
    class SchemaError : public std::runtime_error
    {
    public:
        SchemaError(const std::string &path, const std::string &what)
            : std::runtime_error(path + ": " + what), path_(path) {}
        const std::string &path() const { return path_; }

    private:
        std::string path_;
    };

    class RangeError : public std::out_of_range
    {
    public:
        RangeError(const std::string &path, double value, const std::string &what)
            : std::out_of_range(path + " = " + std::to_string(value) + ": " + what), path_(path), value_(value) {}
        const std::string &path() const { return path_; }
        double value() const { return value_; }

    private:
        std::string path_;
        double value_;
    };
}

#endif
