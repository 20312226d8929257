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

#ifndef NFDOF_SCENARIO_HPP
#define NFDOF_SCENARIO_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfdof/geometry.hpp"
#include "nfdof/knumber.hpp"

namespace nfdof
{
    struct OrientationSpec
    {
        enum class Kind
        {
            Optimal,  // perpendicular to the fan bisector at the array centre
            Searched, // result of maximize_k
            Absolute, // (psi, phi) in the canonical frame
            Relative, // (psi, phi') with phi = beta + phi'
        };
        Kind kind = Kind::Optimal;
        double psi = 0.0;
        double phi = 0.0; // phi for Absolute, phi' for Relative
    };

    struct SweepSpec
    {
        std::string variable; // R, theta, psi or phi_prime
        double start = 0.0;
        double stop = 0.0;
        int count = 1;

        std::vector<double> values() const;
    };

    struct MapExtent
    {
        double y_min = -300.0, y_max = 300.0;
        double z_min = -300.0, z_max = 300.0;
        int n_y = 601, n_z = 601;
    };

    struct SpectrumConfig
    {
        PolarPlacement placement;
        OrientationSpec orientation;
    };

    struct Scenario
    {
        double lambda_m = 0.0;
        double Ls = 0.0; // wavelengths
        double Lp = 0.0; // wavelengths
        PolarPlacement placement;
        OrientationSpec orientation;
        double spacing_s = 0.5;
        double spacing_p = 0.5;
        int quad_points = default_quad_points;
        SearchGrid grid;
        int localbw_grid = 181;
        double edof_tau = 0.1;
        std::optional<SweepSpec> sweep;
        std::vector<double> thetas;
        MapExtent map;
        std::vector<SpectrumConfig> spectra;

        // JSON paths of the fields that were filled from defaults.
        std::vector<std::string> defaulted;
    };

    // Parses and validates a JSON scenario document. Field names carry units
    // (R_wavelengths, theta_rad, ...); the short names (R, theta, Ls, ...) are
    // accepted as aliases. Throws SchemaError or RangeError.
    Scenario parse_scenario(std::string_view text);
    Scenario load_scenario(const std::string &path);

    // Effective scenario with canonical field names and every default filled in.
    nlohmann::json to_json(const Scenario &scenario);

    // FNV-1a 64 of the canonical dump of to_json(scenario), as 16 hex digits.
    std::string scenario_hash(const Scenario &scenario);

    // Applies the --grid / --quad command-line overrides.
    void apply_overrides(Scenario &scenario, std::optional<int> grid, std::optional<int> quad);

    // Receive orientation for a placement. Searched orientations run maximize_k
    // with the scenario's grid and quadrature settings.
    Vec3 resolve_orientation(const Scenario &scenario, const PolarPlacement &placement, const OrientationSpec &spec);
}

#endif
