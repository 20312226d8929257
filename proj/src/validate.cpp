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
#include "nfdof/knumber.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

namespace nfdof
{
    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr double transmit_length = 100.0;
        constexpr int oracle_samples = 20000;

        struct RandomCase
        {
            PolarPlacement placement;
            OrientationAngles orientation; // canonical frame
            CanonicalTransform frame;      // maps the canonical case into an arbitrary frame
            double Lp;
        };

        RandomCase draw(std::mt19937_64 &rng)
        {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            RandomCase c;
            c.placement.R = 60.0 + (2000.0 - 60.0) * unit(rng);
            c.placement.theta = (pi / 2) * unit(rng);
            c.orientation.psi = pi * unit(rng);
            c.orientation.phi = pi * unit(rng);
            c.frame.z_rotation = -pi + 2 * pi * unit(rng);
            c.frame.z_mirror = unit(rng) < 0.5;
            c.Lp = 1.0 + 99.0 * unit(rng);
            return c;
        }

        class Tracker
        {
        public:
            Tracker(std::string name, std::string detail) { check_.name = std::move(name); check_.detail = std::move(detail); }

            // Records one case whose violation is `excess` (<= 0 means satisfied).
            void record(double excess, double measure)
            {
                ++check_.cases;
                check_.worst = std::max(check_.worst, measure);
                if (!(excess <= 0.0))
                    check_.passed = false;
            }

            ValidationCheck result() const { return check_; }

        private:
            ValidationCheck check_;
        };
    }

    bool ValidationReport::passed() const
    {
        for (const auto &c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    void ValidationReport::print(std::ostream &out) const
    {
        for (const auto &c : checks)
        {
            char worst[32];
            std::snprintf(worst, sizeof worst, "%.3e", c.worst);
            out << (c.passed ? "PASS " : "FAIL ") << c.name << " (cases=" << c.cases << ", worst=" << worst << ") "
                << c.detail << '\n';
        }
        out << (passed() ? "validation passed" : "validation FAILED") << '\n';
    }

    ValidationReport cmd_validate(std::uint64_t seed, int n_cases, const ValidationOptions &options)
    {
        if (n_cases < 0)
            throw std::invalid_argument("cmd_validate: negative case count");

        const double Ls = transmit_length;
        auto closed = [&](const Vec3 &p, const Vec3 &v) {
            const double w = local_bandwidth_closed(p, v, Ls);
            return options.corrupt_closed_form ? w * (1.0 + 1e-3) + 1e-6 : w;
        };

        Tracker oracle("closed_vs_oracle", "|closed - oracle(n=20000)| <= 2 k0 alpha / n, arbitrary 3D frame");
        Tracker invariance("canonical_invariance", "closed form unchanged by z-rotation and z-mirror, 1e-9 relative");
        Tracker subtended("alpha_vs_subtended_oracle", "|alpha - angle APB| <= 1e-12");
        Tracker bisector("beta_vs_bisector", "|beta - angle of normalised bisector| <= 1e-12");
        Tracker continuity("branch_continuity", "branches agree at phi' = alpha/2 and pi - alpha/2 to 1e-12");
        Tracker periodicity("phi_periodicity", "omega(psi, phi) = omega(psi, phi + pi) to 1e-12");
        Tracker optimum("maximum_at_v_np", "omega <= 2 k0 sin(alpha/2), equality at v_NP to 1e-12");
        Tracker lower("two_sample_lower_bound", "oracle(n=2) <= closed form");
        Tracker kbound("k_number_bound", "0 <= K_numeric <= 2 Lp");

        std::mt19937_64 rng(seed);
        for (int i = 0; i < n_cases; ++i)
        {
            const RandomCase c = draw(rng);
            const Vec3 p0 = c.placement.point();
            const Vec3 v0 = orientation_vector(c.orientation);
            const Vec3 p = c.frame.apply(p0);
            const Vec3 v = c.frame.apply(v0);
            const GeometryAngles angles = geometry_angles(c.placement, Ls);

            const double w = closed(p, v);
            const double w_oracle = local_bandwidth_oracle(p, v, Ls, oracle_samples);
            const double tol = 2.0 * k0 * angles.alpha / oracle_samples;
            oracle.record(std::abs(w - w_oracle) - tol, std::abs(w - w_oracle));

            const double w0 = closed(p0, v0);
            const double diff = std::abs(w - w0);
            invariance.record(diff - 1e-9 * std::max(std::abs(w0), 1e-3), diff);

            const Vec3 A(0.0, 0.0, Ls / 2), B(0.0, 0.0, -Ls / 2);
            const double da = std::abs(angles.alpha - subtended_angle_oracle(p0, A, B));
            subtended.record(da - 1e-12, da);

            const Vec3 bis = (p0 - A).normalized() + (p0 - B).normalized();
            const double db = std::abs(angles.beta - std::atan2(bis.z(), bis.y()));
            bisector.record(db - 1e-12, db);

            const double psi = c.orientation.psi, a = angles.alpha;
            const double d1 = std::abs(bandwidth_branch(BandwidthBranch::Leading, psi, a / 2, a) -
                                       bandwidth_branch(BandwidthBranch::Middle, psi, a / 2, a));
            const double d2 = std::abs(bandwidth_branch(BandwidthBranch::Middle, psi, pi - a / 2, a) -
                                       bandwidth_branch(BandwidthBranch::Trailing, psi, pi - a / 2, a));
            continuity.record(std::max(d1, d2) - 1e-12, std::max(d1, d2));

            const Vec3 v_shift = orientation_vector(OrientationAngles{psi, c.orientation.phi + pi});
            const double dp = std::abs(closed(p0, v_shift) - w0);
            periodicity.record(dp - 1e-12, dp);

            const double wmax = max_bandwidth(angles.alpha);
            const double at_np = closed(p0, optimal_orientation(angles));
            optimum.record(std::max(w0 - wmax - 1e-12, std::abs(at_np - wmax) - 1e-12), std::abs(at_np - wmax));

            const double w2 = local_bandwidth_oracle(p, v, Ls, 2);
            lower.record(w2 - w - 1e-12, std::max(w2 - w, 0.0));

            try
            {
                const double kn = k_number_numeric(ArraySegment{p, v, c.Lp}, Ls).value;
                kbound.record(std::max(kn - 2.0 * c.Lp, -kn), std::max(kn - 2.0 * c.Lp, 0.0));
            }
            catch (const DegeneratePoint &)
            {
                // receive array crosses the transmit segment; not a valid configuration
            }
        }

        ValidationReport report;
        for (const Tracker *t : {&oracle, &invariance, &subtended, &bisector, &continuity, &periodicity, &optimum,
                                 &lower, &kbound})
            report.checks.push_back(t->result());
        return report;
    }
}
