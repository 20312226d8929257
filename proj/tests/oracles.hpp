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

#ifndef NFDOF_TESTS_ORACLES_HPP
#define NFDOF_TESTS_ORACLES_HPP

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle
{
    constexpr double pi = std::numbers::pi;
    constexpr double k0 = 2.0 * pi;

    // Extreme spatial frequencies by enumerating propagation angles across the
    // fan [-alpha/2, alpha/2] (relative to the bisector), f = k0 sin(psi) cos(g - phi').
    inline std::pair<double, double> fan_extremes(double psi, double phi_prime, double alpha, int samples = 200001)
    {
        double hi = -std::numeric_limits<double>::infinity();
        double lo = std::numeric_limits<double>::infinity();
        for (int i = 0; i < samples; ++i)
        {
            const double g = -alpha / 2 + alpha * i / (samples - 1);
            const double f = k0 * std::sin(psi) * std::cos(g - phi_prime);
            hi = std::max(hi, f);
            lo = std::min(lo, f);
        }
        return {hi, lo};
    }

    // Subtended angle and bisector tilt straight from endpoint vectors.
    struct FanAngles
    {
        double alpha;
        double beta;
    };

    inline FanAngles fan_from_points(double R, double theta, double Ls)
    {
        const Eigen::Vector3d P(0.0, R * std::cos(theta), R * std::sin(theta));
        const Eigen::Vector3d a = (P - Eigen::Vector3d(0, 0, Ls / 2)).normalized();
        const Eigen::Vector3d b = (P - Eigen::Vector3d(0, 0, -Ls / 2)).normalized();
        const Eigen::Vector3d bis = (a + b).normalized();
        return {std::acos(std::clamp(a.dot(b), -1.0, 1.0)), std::atan2(bis.z(), bis.y())};
    }

    // det(M - x I) by complex Gaussian elimination with partial pivoting.
    inline double shifted_determinant(const Eigen::MatrixXcd &M, double x)
    {
        const Eigen::Index n = M.rows();
        std::vector<std::complex<double>> a(static_cast<std::size_t>(n * n));
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                a[i * n + j] = M(i, j) - (i == j ? x : 0.0);
        std::complex<double> det = 1.0;
        for (Eigen::Index k = 0; k < n; ++k)
        {
            Eigen::Index piv = k;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k]))
                    piv = i;
            if (a[piv * n + k] == 0.0)
                return 0.0;
            if (piv != k)
            {
                for (Eigen::Index j = 0; j < n; ++j)
                    std::swap(a[k * n + j], a[piv * n + j]);
                det = -det;
            }
            det *= a[k * n + k];
            for (Eigen::Index i = k + 1; i < n; ++i)
            {
                const auto m = a[i * n + k] / a[k * n + k];
                for (Eigen::Index j = k; j < n; ++j)
                    a[i * n + j] -= m * a[k * n + j];
            }
        }
        return det.real();
    }

    // Real roots of the characteristic polynomial of a Hermitian matrix: scan for
    // sign changes over the Frobenius bound, then bisect. Assumes simple roots.
    inline std::vector<double> characteristic_roots(const Eigen::MatrixXcd &M, int scan = 40000)
    {
        const double bound = M.norm() * 1.01 + 1e-12;
        std::vector<double> roots;
        double x0 = -bound, f0 = shifted_determinant(M, x0);
        for (int i = 1; i <= scan; ++i)
        {
            const double x1 = -bound + 2.0 * bound * i / scan;
            const double f1 = shifted_determinant(M, x1);
            if (f0 == 0.0)
                roots.push_back(x0);
            else if ((f0 < 0.0) != (f1 < 0.0))
            {
                double lo = x0, hi = x1, flo = f0;
                for (int it = 0; it < 200 && hi - lo > 1e-15 * bound; ++it)
                {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = shifted_determinant(M, mid);
                    if ((fm < 0.0) == (flo < 0.0))
                    {
                        lo = mid;
                        flo = fm;
                    }
                    else
                        hi = mid;
                }
                roots.push_back(0.5 * (lo + hi));
            }
            x0 = x1;
            f0 = f1;
        }
        std::sort(roots.begin(), roots.end(), std::greater<double>());
        return roots;
    }

    inline Eigen::MatrixXcd random_hermitian(int n, unsigned seed)
    {
        std::srand(seed);
        Eigen::MatrixXcd A = Eigen::MatrixXcd::Random(n, n);
        return 0.5 * (A + A.adjoint());
    }
}

#endif
