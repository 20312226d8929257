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

#ifndef NFDOF_NUMERICS_HPP
#define NFDOF_NUMERICS_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "nfdof/errors.hpp"

namespace nfdof
{
    enum class QuadratureKind
    {
        Trapezoid,
        Simpson,
    };

    struct QuadratureRule
    {
        QuadratureKind kind = QuadratureKind::Simpson;
        int nodes = 129;
    };

    inline void validate_rule(const QuadratureRule &rule)
    {
        if (rule.nodes < 3)
            throw InvalidRule("quadrature needs at least 3 nodes, got " + std::to_string(rule.nodes));
        if (rule.kind == QuadratureKind::Simpson && rule.nodes % 2 == 0)
            throw InvalidRule("Simpson rule needs an odd node count, got " + std::to_string(rule.nodes));
    }

    // Composite trapezoid or Simpson estimate of the integral of f over [a, b].
    template <typename Scalar, typename F>
    Scalar integrate(F &&f, Scalar a, Scalar b, const QuadratureRule &rule)
    {
        validate_rule(rule);
        if (b < a)
            throw std::invalid_argument("integrate: lower limit exceeds upper limit");
        if (a == b)
            return Scalar(0);

        const int intervals = rule.nodes - 1;
        const Scalar h = (b - a) / Scalar(intervals);
        auto node = [&](int i) { return i == intervals ? b : a + Scalar(i) * h; };

        Scalar sum = std::invoke(f, a) + std::invoke(f, b);
        if (rule.kind == QuadratureKind::Trapezoid)
        {
            for (int i = 1; i < intervals; ++i)
                sum += Scalar(2) * std::invoke(f, node(i));
            return sum * h / Scalar(2);
        }
        for (int i = 1; i < intervals; ++i)
            sum += (i % 2 == 1 ? Scalar(4) : Scalar(2)) * std::invoke(f, node(i));
        return sum * h / Scalar(3);
    }

    // Eigenvalues of a Hermitian (or real symmetric) matrix by cyclic Jacobi
    // rotations, sorted descending. Iterates until the off-diagonal Frobenius
    // norm drops below 1e-12 * ||M||_F.
    template <typename Derived>
    Eigen::Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real, Eigen::Dynamic, 1>
    hermitian_eigenvalues(const Eigen::MatrixBase<Derived> &m, int max_sweeps = 100)
    {
        using Scalar = typename Derived::Scalar;
        using Real = typename Eigen::NumTraits<Scalar>::Real;
        using Eigen::numext::conj;
        using Eigen::numext::real;
        using std::abs, std::sqrt;

        if (m.rows() != m.cols())
            throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
        const Eigen::Index n = m.rows();

        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
        const Real total = a.norm();
        if (!std::isfinite(static_cast<double>(total)))
            throw std::invalid_argument("hermitian_eigenvalues: non-finite entries");
        if ((a - a.adjoint()).norm() > Real(1e-12) * total)
            throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");

        auto off_diagonal = [&]() {
            Real s = Real(0);
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index i = 0; i < n; ++i)
                    if (i != j)
                        s += Eigen::numext::abs2(a(i, j));
            return sqrt(s);
        };

        const Real target = Real(1e-12) * total;
        bool converged = total == Real(0);
        for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep)
        {
            if (off_diagonal() <= target)
            {
                converged = true;
                break;
            }
            for (Eigen::Index p = 0; p + 1 < n; ++p)
            {
                for (Eigen::Index q = p + 1; q < n; ++q)
                {
                    const Scalar apq = a(p, q);
                    const Real mag = abs(apq);
                    if (mag == Real(0))
                        continue;
                    // Phase-rotate column q so a(p, q) becomes real, then apply a real rotation.
                    const Scalar phase = conj(apq / mag);
                    const Real tau = (real(a(q, q)) - real(a(p, p))) / (Real(2) * mag);
                    const Real t = (tau >= Real(0) ? Real(1) : Real(-1)) / (abs(tau) + sqrt(Real(1) + tau * tau));
                    const Real c = Real(1) / sqrt(Real(1) + t * t);
                    const Real s = t * c;

                    for (Eigen::Index k = 0; k < n; ++k)
                    {
                        if (k == p || k == q)
                            continue;
                        const Scalar akp = a(k, p);
                        const Scalar akq = phase * a(k, q);
                        a(k, p) = c * akp - s * akq;
                        a(k, q) = s * akp + c * akq;
                        a(p, k) = conj(a(k, p));
                        a(q, k) = conj(a(k, q));
                    }
                    a(p, p) = Scalar(real(a(p, p)) - t * mag);
                    a(q, q) = Scalar(real(a(q, q)) + t * mag);
                    a(p, q) = Scalar(0);
                    a(q, p) = Scalar(0);
                }
            }
        }
        if (!converged && off_diagonal() > target)
            throw NumericalFailure("hermitian_eigenvalues: no convergence within " + std::to_string(max_sweeps) + " sweeps");

        Eigen::Matrix<Real, Eigen::Dynamic, 1> values(n);
        for (Eigen::Index i = 0; i < n; ++i)
            values(i) = real(a(i, i));
        std::sort(values.data(), values.data() + n, std::greater<Real>());
        return values;
    }
}

#endif
