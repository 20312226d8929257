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

#ifndef NFDOF_CHANNEL_HPP
#define NFDOF_CHANNEL_HPP

#include <Eigen/Core>

#include "nfdof/geometry.hpp"

namespace nfdof
{
    // Antenna positions (wavelengths), one per column.
    struct AntennaGrid
    {
        Eigen::Matrix3Xd positions;
        double spacing = 0.0;

        Eigen::Index count() const { return positions.cols(); }
    };

    struct ChannelMatrix
    {
        Eigen::MatrixXcd entries; // N_r x N_t
        double lambda_m = 0.0;    // wavelength in metres; scales amplitudes only
    };

    struct SingularSpectrum
    {
        Eigen::VectorXd values;     // descending
        Eigen::VectorXd normalized; // values / values(0)
    };

    inline constexpr double default_edof_threshold = 0.1;

    // length/spacing + 1 antennas spread symmetrically over the segment, both endpoints included.
    AntennaGrid antenna_grid(const ArraySegment &segment, double spacing);

    // h = lambda / (4 pi r) * exp(j k0 r) between every receive/transmit pair.
    ChannelMatrix los_channel(const AntennaGrid &tx, const AntennaGrid &rx, double lambda_m);

    // All min(N_r, N_t) singular values from the eigenvalues of the smaller Gram matrix.
    SingularSpectrum singular_spectrum(const ChannelMatrix &H);
    SingularSpectrum singular_spectrum(const Eigen::MatrixXcd &H);

    // Number of normalised singular values >= tau.
    int edof_threshold(const SingularSpectrum &spectrum, double tau = default_edof_threshold);

    // (sum sigma^2)^2 / sum sigma^4.
    double edof_quadratic(const SingularSpectrum &spectrum);
}

#endif
