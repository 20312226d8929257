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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nfdof/numerics.hpp"
#include "oracles.hpp"

#include <Eigen/Dense>

using namespace nfdof;
using doctest::Approx;

namespace
{
    constexpr double pi = std::numbers::pi;
    const QuadratureRule simpson129{QuadratureKind::Simpson, 129};
}

TEST_CASE("integrate examples")
{
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, simpson129) == Approx(1.0).epsilon(1e-15));
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, QuadratureRule{QuadratureKind::Trapezoid, 3}) ==
          Approx(1.0).epsilon(1e-15));
    CHECK(integrate([](double x) { return x * x * x; }, 0.0, 1.0, QuadratureRule{QuadratureKind::Simpson, 3}) ==
          Approx(0.25).epsilon(1e-15));
    // error bound h^4 (b - a) max|f''''| / 180
    const double h = pi / 128;
    CHECK(std::abs(integrate([](double x) { return std::sin(x); }, 0.0, pi, simpson129) - 2.0) <= std::pow(h, 4) * pi / 180);
    CHECK(integrate([](double x) { return 3 * x - 1; }, -2.0, 5.0, QuadratureRule{QuadratureKind::Trapezoid, 4}) ==
          Approx(0.5 * 3 * (25 - 4) - 7).epsilon(1e-14));
    CHECK(integrate([](double x) { return x; }, 2.0, 2.0, simpson129) == 0.0);
}

TEST_CASE("integrate rejects bad rules")
{
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, QuadratureRule{QuadratureKind::Simpson, 128}), InvalidRule);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, QuadratureRule{QuadratureKind::Trapezoid, 2}), InvalidRule);
    CHECK_THROWS_AS(integrate(f, 1.0, 0.0, simpson129), std::invalid_argument);
}

TEST_CASE("Simpson converges at fourth order")
{
    auto f = [](double x) { return std::sin(x); };
    double prev = std::abs(integrate(f, 0.0, pi, QuadratureRule{QuadratureKind::Simpson, 9}) - 2.0);
    for (int nodes : {17, 33, 65})
    {
        const double err = std::abs(integrate(f, 0.0, pi, QuadratureRule{QuadratureKind::Simpson, nodes}) - 2.0);
        CHECK(std::log2(prev / err) >= 3.8);
        prev = err;
    }
}

TEST_CASE("hermitian_eigenvalues examples")
{
    const Eigen::VectorXd id = hermitian_eigenvalues(Eigen::MatrixXcd::Identity(3, 3));
    CHECK((id - Eigen::VectorXd::Ones(3)).norm() < 1e-15);

    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
    d.diagonal() << 5, -1, 2;
    const Eigen::VectorXd e = hermitian_eigenvalues(d);
    CHECK(e(0) == 5.0);
    CHECK(e(1) == 2.0);
    CHECK(e(2) == -1.0);

    CHECK(hermitian_eigenvalues(Eigen::MatrixXcd::Zero(4, 4)).norm() == 0.0);
}

TEST_CASE("hermitian_eigenvalues matches characteristic polynomial roots")
{
    for (unsigned seed = 1; seed <= 10; ++seed)
    {
        const Eigen::MatrixXcd M = oracle::random_hermitian(4, seed);
        const Eigen::VectorXd e = hermitian_eigenvalues(M);
        const auto roots = oracle::characteristic_roots(M);
        REQUIRE(roots.size() == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(e(i) - roots[i]) < 1e-9);
    }
}

TEST_CASE("hermitian_eigenvalues invariants")
{
    const Eigen::MatrixXcd M = oracle::random_hermitian(6, 42);
    const Eigen::VectorXd e = hermitian_eigenvalues(M);
    CHECK(std::abs(e.sum() - M.trace().real()) <= 1e-10 * std::max(1.0, std::abs(M.trace().real())));
    for (int i = 0; i + 1 < e.size(); ++i)
        CHECK(e(i) >= e(i + 1));

    // unitary diagonal conjugation
    Eigen::VectorXcd phases(6);
    for (int i = 0; i < 6; ++i)
        phases(i) = std::polar(1.0, 0.7 * i + 0.1);
    const Eigen::MatrixXcd D = phases.asDiagonal();
    const Eigen::VectorXd e2 = hermitian_eigenvalues(Eigen::MatrixXcd(D.adjoint() * M * D));
    CHECK((e - e2).norm() < 1e-9);

    // and a library eigensolver as a second opinion
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(M);
    Eigen::VectorXd ref_sorted = ref.eigenvalues().reverse();
    CHECK((e - ref_sorted).norm() < 1e-10);
}

TEST_CASE("hermitian_eigenvalues errors")
{
    Eigen::MatrixXcd M = oracle::random_hermitian(4, 3);
    M(0, 1) += std::complex<double>(0.0, 0.5);
    CHECK_THROWS_AS(hermitian_eigenvalues(M), std::invalid_argument);
    CHECK_THROWS_AS(hermitian_eigenvalues(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
    const Eigen::MatrixXcd H = oracle::random_hermitian(12, 4);
    CHECK_THROWS_AS(hermitian_eigenvalues(H, 1), NumericalFailure);
}

TEST_CASE("hermitian_eigenvalues works in long double")
{
    Eigen::Matrix<long double, 3, 3> m;
    m << 2, 1, 0, 1, 2, 1, 0, 1, 2;
    const auto e = hermitian_eigenvalues(m);
    const long double s = std::sqrt(2.0L);
    CHECK(static_cast<double>(e(0)) == Approx(double(2 + s)).epsilon(1e-15));
    CHECK(static_cast<double>(e(1)) == Approx(2.0).epsilon(1e-15));
    CHECK(static_cast<double>(e(2)) == Approx(double(2 - s)).epsilon(1e-14));
}
