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

#include "nfdof/channel.hpp"

#include "nfdof/numerics.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace nfdof
{
    AntennaGrid antenna_grid(const ArraySegment &segment, double spacing)
    {
        if (!(spacing > 0.0))
            throw std::invalid_argument("antenna_grid: spacing must be positive");
        if (!(segment.length >= 0.0))
            throw std::invalid_argument("antenna_grid: segment length must be non-negative");

        const double ratio = segment.length / spacing;
        const double intervals = std::round(ratio);
        if (std::abs(ratio - intervals) > 1e-9)
            throw NonIntegerGrid("antenna_grid: length / spacing = " + std::to_string(ratio) + " is not an integer");

        const auto n = static_cast<Eigen::Index>(intervals);
        AntennaGrid grid;
        grid.spacing = spacing;
        grid.positions.resize(3, n + 1);
        for (Eigen::Index i = 0; i <= n; ++i)
        {
            // offsets from L/n keep both endpoints exact
            const double l = n == 0 ? 0.0 : -segment.length / 2.0 + segment.length * double(i) / double(n);
            grid.positions.col(i) = segment.at(l);
        }
        return grid;
    }

    ChannelMatrix los_channel(const AntennaGrid &tx, const AntennaGrid &rx, double lambda_m)
    {
        if (!(lambda_m > 0.0))
            throw std::invalid_argument("los_channel: wavelength must be positive");

        constexpr double two_pi = 2.0 * std::numbers::pi;
        ChannelMatrix H;
        H.lambda_m = lambda_m;
        H.entries.resize(rx.count(), tx.count());
        for (Eigen::Index t = 0; t < tx.count(); ++t)
        {
            for (Eigen::Index r = 0; r < rx.count(); ++r)
            {
                const double dist = (rx.positions.col(r) - tx.positions.col(t)).norm();
                if (dist == 0.0)
                    throw CoincidentAntennas("los_channel: receive and transmit antennas coincide");
                // reduce the distance in wavelengths before scaling by 2 pi
                const double phase = two_pi * (dist - std::floor(dist));
                const double dist_m = dist * lambda_m;
                H.entries(r, t) = std::polar(lambda_m / (4.0 * std::numbers::pi * dist_m), phase);
            }
        }
        return H;
    }

    SingularSpectrum singular_spectrum(const Eigen::MatrixXcd &H)
    {
        if (!H.allFinite())
            throw std::invalid_argument("singular_spectrum: non-finite channel entries");

        Eigen::MatrixXcd gram = H.rows() >= H.cols() ? Eigen::MatrixXcd(H.adjoint() * H) : Eigen::MatrixXcd(H * H.adjoint());
        gram = (0.5 * (gram + gram.adjoint())).eval();

        const Eigen::VectorXd eig = hermitian_eigenvalues(gram);
        SingularSpectrum s;
        s.values = eig.cwiseMax(0.0).cwiseSqrt();
        s.normalized = s.values.size() > 0 && s.values(0) > 0.0 ? Eigen::VectorXd(s.values / s.values(0))
                                                                : Eigen::VectorXd::Zero(s.values.size());
        return s;
    }

    SingularSpectrum singular_spectrum(const ChannelMatrix &H)
    {
        return singular_spectrum(H.entries);
    }

    int edof_threshold(const SingularSpectrum &spectrum, double tau)
    {
        if (!(tau > 0.0 && tau <= 1.0))
            throw std::invalid_argument("edof_threshold: tau must lie in (0, 1]");
        return static_cast<int>((spectrum.normalized.array() >= tau).count());
    }

    double edof_quadratic(const SingularSpectrum &spectrum)
    {
        const double s2 = spectrum.values.squaredNorm();
        if (!(s2 > 0.0))
            throw AllZeroSpectrum("edof_quadratic: spectrum has no positive singular value");
        const double s4 = spectrum.values.array().square().square().sum();
        return s2 * s2 / s4;
    }
}
