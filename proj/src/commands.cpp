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

#include "nfdof/commands.hpp"

#include "nfdof/bandwidth.hpp"
#include "nfdof/channel.hpp"
#include "nfdof/knumber.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nfdof
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        std::vector<double> linspace(double a, double b, int n)
        {
            std::vector<double> out(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                out[i] = n == 1 ? a : (i == n - 1 ? b : a + (b - a) * i / (n - 1));
            return out;
        }

        struct OrientationInFan
        {
            double psi;
            double phi_prime;
        };

        OrientationInFan fan_angles(const Vec3 &v, const GeometryAngles &angles)
        {
            const double psi = std::acos(std::clamp(v.x(), -1.0, 1.0));
            const double phi = std::atan2(v.z(), v.y());
            return {psi, reduce_phi_prime(phi, angles.beta)};
        }
    }

    void stamp_provenance(SweepTable &table, const Scenario &scenario, std::uint64_t seed)
    {
        table.add_provenance("scenario_hash: fnv1a64:" + scenario_hash(scenario));
        table.add_provenance("seed: " + std::to_string(seed));
        std::string defaults;
        for (const auto &d : scenario.defaulted)
            defaults += (defaults.empty() ? "" : " ") + d;
        table.add_provenance("defaulted: " + (defaults.empty() ? std::string("none") : defaults));
    }

    SweepTable cmd_localbw_sweep(const Scenario &scenario)
    {
        SweepTable table("localbw", {{"psi", "receive polar angle from +x [rad]"},
                                     {"phi_prime", "receive azimuth from the fan bisector [rad]"},
                                     {"omega_over_k0", "local spatial bandwidth / k0 at the array centre"}});
        const Vec3 p = scenario.placement.point();
        const GeometryAngles angles = geometry_angles(scenario.placement, scenario.Ls);
        const auto grid = linspace(0.0, pi, scenario.localbw_grid);
        for (double psi : grid)
            for (double phi_prime : grid)
            {
                const Vec3 v = orientation_vector(OrientationAngles{psi, angles.beta + phi_prime});
                table.add_row({psi, phi_prime, local_bandwidth_closed(p, v, scenario.Ls) / k0});
            }
        return table;
    }

    SweepTable cmd_maxbw_map(const Scenario &scenario)
    {
        SweepTable table("maxbw-map", {{"y", "observation y [wavelengths]"},
                                       {"z", "observation z [wavelengths]"},
                                       {"omega_max_over_k0", "maximum local bandwidth / k0 = 2 sin(alpha/2)"},
                                       {"on_segment", "1 if the point lies on the transmit segment"}});
        const MapExtent &m = scenario.map;
        for (double y : linspace(m.y_min, m.y_max, m.n_y))
            for (double z : linspace(m.z_min, m.z_max, m.n_z))
            {
                const Vec3 p(0.0, y, z);
                if (on_transmit_segment(p, scenario.Ls))
                {
                    table.add_row({y, z, 2.0, 1.0});
                    continue;
                }
                const CanonicalFrame frame = canonicalize(p, Vec3(Vec3::UnitZ()), scenario.Ls);
                const GeometryAngles angles = geometry_angles(frame.placement, scenario.Ls);
                table.add_row({y, z, max_bandwidth(angles.alpha) / k0, 0.0});
            }
        return table;
    }

    SweepTable cmd_kmax_sweep(const Scenario &scenario)
    {
        SweepTable table("kmax", {{"R", "receive-array centre distance [wavelengths]"},
                                  {"theta", "receive-array centre angle from +y [rad]"},
                                  {"AK", "K number from 2 Lp sin(alpha/2)"},
                                  {"EK", "numeric K number maximised over receive orientations"},
                                  {"EK_psi", "psi of the EK orientation [rad]"},
                                  {"EK_phi_prime", "phi' of the EK orientation [rad]"}});
        std::vector<double> radii;
        if (scenario.sweep && scenario.sweep->variable == "R")
            radii = scenario.sweep->values();
        else
            radii = linspace(100.0, 1000.0, 19);
        std::sort(radii.begin(), radii.end());
        std::vector<double> thetas = scenario.thetas;
        std::sort(thetas.begin(), thetas.end());

        for (double R : radii)
            for (double theta : thetas)
            {
                const PolarPlacement placement{R, theta};
                const double ak = k_number_max(placement, scenario.Lp, scenario.Ls).value;
                const auto ek = maximize_k(placement, scenario.Lp, scenario.Ls, scenario.grid, scenario.quad_points);
                table.add_row({R, theta, ak, ek.best_k.value, ek.best_orientation.psi, ek.best_phi_prime});
            }
        return table;
    }

    std::vector<SpectrumConfig> spectrum_configs(const Scenario &scenario)
    {
        if (!scenario.spectra.empty())
            return scenario.spectra;

        std::vector<SpectrumConfig> configs;
        if (scenario.sweep && (scenario.sweep->variable == "psi" || scenario.sweep->variable == "phi_prime"))
        {
            const bool sweep_psi = scenario.sweep->variable == "psi";
            for (double x : scenario.sweep->values())
            {
                SpectrumConfig c;
                c.placement = scenario.placement;
                c.orientation.kind = OrientationSpec::Kind::Relative;
                c.orientation.psi = sweep_psi ? x : pi / 2;
                c.orientation.phi = sweep_psi ? pi / 2 : x;
                configs.push_back(c);
            }
            return configs;
        }
        if (scenario.sweep && (scenario.sweep->variable == "R" || scenario.sweep->variable == "theta"))
        {
            for (double x : scenario.sweep->values())
            {
                SpectrumConfig c{scenario.placement, scenario.orientation};
                (scenario.sweep->variable == "R" ? c.placement.R : c.placement.theta) = x;
                configs.push_back(c);
            }
            return configs;
        }
        configs.push_back({scenario.placement, scenario.orientation});
        return configs;
    }

    SweepTable cmd_svd_spectrum(const Scenario &scenario)
    {
        SweepTable table("svd", {{"config_id", "configuration index"},
                                 {"R", "receive-array centre distance [wavelengths]"},
                                 {"theta", "receive-array centre angle [rad]"},
                                 {"psi", "receive orientation polar angle [rad]"},
                                 {"phi_prime", "receive orientation azimuth from the fan bisector [rad]"},
                                 {"n", "singular value index, 1-based"},
                                 {"sigma", "singular value"},
                                 {"sigma_normalized", "singular value / largest singular value"},
                                 {"AK", "K number from 2 Lp sin(alpha/2)"},
                                 {"K2", "centre-approximation K number at this orientation"},
                                 {"K_numeric", "numeric K number at this orientation"},
                                 {"EK", "numeric K number maximised over orientations"},
                                 {"edof_threshold", "count of normalised singular values >= edof_tau"},
                                 {"edof_quadratic", "(sum sigma^2)^2 / sum sigma^4"}});

        const AntennaGrid tx = antenna_grid(transmit_segment(scenario.Ls), scenario.spacing_s);
        const auto configs = spectrum_configs(scenario);
        for (std::size_t id = 0; id < configs.size(); ++id)
        {
            const SpectrumConfig &c = configs[id];
            const GeometryAngles angles = geometry_angles(c.placement, scenario.Ls);
            const auto ek = maximize_k(c.placement, scenario.Lp, scenario.Ls, scenario.grid, scenario.quad_points);
            const Vec3 v = c.orientation.kind == OrientationSpec::Kind::Searched
                               ? ek.direction()
                               : resolve_orientation(scenario, c.placement, c.orientation);
            const ArraySegment receiver{c.placement.point(), v, scenario.Lp};
            const AntennaGrid rx = antenna_grid(receiver, scenario.spacing_p);
            const SingularSpectrum spectrum = singular_spectrum(los_channel(tx, rx, scenario.lambda_m));

            const auto fan = fan_angles(v, angles);
            const double ak = k_number_max(c.placement, scenario.Lp, scenario.Ls).value;
            const double k2 = k_number_center(receiver, scenario.Ls).value;
            const double kn = k_number_numeric(receiver, scenario.Ls, scenario.quad_points).value;
            const double et = edof_threshold(spectrum, scenario.edof_tau);
            const double eq = edof_quadratic(spectrum);
            for (Eigen::Index n = 0; n < spectrum.values.size(); ++n)
                table.add_row({double(id), c.placement.R, c.placement.theta, fan.psi, fan.phi_prime, double(n + 1),
                               spectrum.values(n), spectrum.normalized(n), ak, k2, kn, ek.best_k.value, et, eq});
        }
        return table;
    }
}
