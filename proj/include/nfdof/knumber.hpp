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

#ifndef NFDOF_KNUMBER_HPP
#define NFDOF_KNUMBER_HPP

#include "nfdof/bandwidth.hpp"
#include "nfdof/geometry.hpp"

namespace nfdof
{
    enum class KMethod
    {
        Numeric,         // quadrature of the local bandwidth along the receive array
        CenterApprox,    // centre bandwidth times L_p / 2 pi
        CenterApproxMax, // centre approximation at the optimal orientation
    };

    struct KNumber
    {
        double value = 0.0;
        KMethod method = KMethod::Numeric;
    };

    inline constexpr int default_quad_points = 129;

    struct SearchGrid
    {
        int n_psi = 64;
        int n_phi = 64;
    };

    struct OrientationSearchResult
    {
        OrientationAngles best_orientation; // absolute (psi, phi) in the canonical frame
        double best_phi_prime = 0.0;        // phi - beta at the array centre
        KNumber best_k;
        SearchGrid grid_resolution;

        Vec3 direction() const { return orientation_vector(best_orientation); }
    };

    // Nyquist sample count (1/2pi) * integral of the local bandwidth over the
    // receive array, by composite Simpson with quad_points nodes.
    KNumber k_number_numeric(const ArraySegment &receiver, double Ls, int quad_points = default_quad_points);

    // (L_p / 2pi) * bandwidth at the receive-array centre.
    KNumber k_number_center(const ArraySegment &receiver, double Ls);

    // 2 L_p sin(alpha / 2): the centre approximation at the optimal orientation.
    KNumber k_number_max(const PolarPlacement &placement, double Lp, double Ls);

    // Receive array at the placement with orientation (psi, beta + phi_prime).
    ArraySegment receive_array(const PolarPlacement &placement, double Lp, double Ls, double psi, double phi_prime);

    // Exhaustive two-stage grid search for the orientation that maximises the
    // numeric K number. Coarse grid over psi in [0, pi], phi' in [0, pi), then a
    // 21 x 21 grid at one tenth of the coarse step around the best coarse cell.
    OrientationSearchResult maximize_k(const PolarPlacement &placement, double Lp, double Ls, SearchGrid grid = {},
                                       int quad_points = default_quad_points);
}

#endif
