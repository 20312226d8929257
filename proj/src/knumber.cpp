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

#include "nfdof/knumber.hpp"

#include "nfdof/numerics.hpp"

#include <cmath>
#include <numbers>

namespace nfdof
{
    namespace
    {
        constexpr int refine_half_width = 10;
        constexpr double refine_factor = 10.0;

        void require_receiver(const ArraySegment &receiver)
        {
            if (!(receiver.length >= 0.0))
                throw std::invalid_argument("receive array length must be non-negative");
        }
    }

    KNumber k_number_numeric(const ArraySegment &receiver, double Ls, int quad_points)
    {
        require_receiver(receiver);
        const double half = receiver.length / 2.0;
        const double integral = integrate(
            [&](double l) { return local_bandwidth_closed(receiver.at(l), receiver.direction, Ls); }, -half, half,
            QuadratureRule{QuadratureKind::Simpson, quad_points});
        return {integral / (2.0 * std::numbers::pi), KMethod::Numeric};
    }

    KNumber k_number_center(const ArraySegment &receiver, double Ls)
    {
        require_receiver(receiver);
        const double omega = local_bandwidth_closed(receiver.center, receiver.direction, Ls);
        return {receiver.length * omega / (2.0 * std::numbers::pi), KMethod::CenterApprox};
    }

    KNumber k_number_max(const PolarPlacement &placement, double Lp, double Ls)
    {
        const GeometryAngles angles = geometry_angles(placement, Ls);
        if (!(angles.alpha > 0.0))
            throw DegenerateGeometry("k_number_max: subtended angle is zero");
        return {k0 * Lp / std::numbers::pi * std::sin(angles.alpha / 2.0), KMethod::CenterApproxMax};
    }

    ArraySegment receive_array(const PolarPlacement &placement, double Lp, double Ls, double psi, double phi_prime)
    {
        const GeometryAngles angles = geometry_angles(placement, Ls);
        return {placement.point(), orientation_vector(OrientationAngles{psi, angles.beta + phi_prime}), Lp};
    }

    OrientationSearchResult maximize_k(const PolarPlacement &placement, double Lp, double Ls, SearchGrid grid,
                                       int quad_points)
    {
        if (grid.n_psi < 8 || grid.n_phi < 8)
            throw std::invalid_argument("maximize_k: search grid needs at least 8 points per axis");
        const GeometryAngles angles = geometry_angles(placement, Ls);
        if (!(angles.alpha > 0.0))
            throw DegenerateGeometry("maximize_k: subtended angle is zero");

        constexpr double pi = std::numbers::pi;
        const double psi_step = pi / (grid.n_psi - 1);
        const double phi_step = pi / grid.n_phi;

        double best_psi = 0.0, best_phi_prime = 0.0;
        double best = -1.0;
        auto consider = [&](double psi, double phi_prime) {
            double k = 0.0;
            try
            {
                k = k_number_numeric(receive_array(placement, Lp, Ls, psi, phi_prime), Ls, quad_points).value;
            }
            catch (const DegeneratePoint &)
            {
                return; // receive array would cross the transmit segment
            }
            // strict comparison keeps the first (lowest-index) candidate on ties
            if (k > best)
            {
                best = k;
                best_psi = psi;
                best_phi_prime = phi_prime;
            }
        };

        for (int i = 0; i < grid.n_psi; ++i)
            for (int j = 0; j < grid.n_phi; ++j)
                consider(i * psi_step, j * phi_step);

        const double coarse_psi = best_psi, coarse_phi = best_phi_prime;
        for (int i = -refine_half_width; i <= refine_half_width; ++i)
        {
            const double psi = coarse_psi + i * psi_step / refine_factor;
            if (psi < 0.0 || psi > pi)
                continue;
            for (int j = -refine_half_width; j <= refine_half_width; ++j)
                consider(psi, reduce_phi_prime(coarse_phi + j * phi_step / refine_factor, 0.0));
        }

        // Centre-optimal orientation, in the closure of the grid.
        consider(pi / 2.0, pi / 2.0);

        OrientationSearchResult result;
        result.best_orientation = {best_psi, angles.beta + best_phi_prime};
        result.best_phi_prime = best_phi_prime;
        result.best_k = {best, KMethod::Numeric};
        result.grid_resolution = grid;
        return result;
    }
}
