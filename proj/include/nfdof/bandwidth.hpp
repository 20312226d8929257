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

#ifndef NFDOF_BANDWIDTH_HPP
#define NFDOF_BANDWIDTH_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include "nfdof/geometry.hpp"

namespace nfdof
{
    // Spatial frequency k0 * r_hat(p, s) . v of the wave from source s seen at p along v.
    template <typename Scalar>
    Scalar spatial_frequency(const Vec3T<Scalar> &p, const Vec3T<Scalar> &s, const Vec3T<Scalar> &v)
    {
        const Vec3T<Scalar> d = p - s;
        const Scalar n = d.norm();
        if (n == Scalar(0))
            throw DegeneratePoint("spatial_frequency: observation point coincides with source");
        return k0_v<Scalar> * d.dot(v) / n;
    }

    template <typename Scalar>
    struct FrequencyRangeT
    {
        Scalar fmax = Scalar(0);
        Scalar fmin = Scalar(0);
        Scalar width() const { return fmax - fmin; }
    };
    using FrequencyRange = FrequencyRangeT<double>;

    // Snap window used at the branch boundaries phi' = alpha/2 and phi' = pi - alpha/2.
    template <typename Scalar>
    inline constexpr Scalar branch_snap_v = Scalar(1e-12);

    namespace detail
    {
        template <typename Scalar>
        Scalar snap_phi_prime(Scalar phi_prime, Scalar alpha)
        {
            using std::abs;
            const Scalar lo = alpha / Scalar(2);
            const Scalar hi = pi_v<Scalar> - alpha / Scalar(2);
            if (abs(phi_prime - lo) <= branch_snap_v<Scalar>)
                return lo;
            if (abs(phi_prime - hi) <= branch_snap_v<Scalar>)
                return hi;
            return phi_prime;
        }
    }

    // Extreme spatial frequencies over the fan, with phi' measured from the fan
    // bisector. psi in [0, pi], phi' in [0, pi], alpha in [0, pi).
    template <typename Scalar>
    FrequencyRangeT<Scalar> fmax_fmin(Scalar psi, Scalar phi_prime, Scalar alpha)
    {
        using std::cos, std::sin;
        const Scalar k = k0_v<Scalar> * sin(psi);
        const Scalar half = alpha / Scalar(2);
        phi_prime = detail::snap_phi_prime(phi_prime, alpha);

        FrequencyRangeT<Scalar> r;
        r.fmax = phi_prime <= half ? k : k * cos(half - phi_prime);
        r.fmin = phi_prime < pi_v<Scalar> - half ? k * cos(-half - phi_prime) : -k;
        return r;
    }

    enum class BandwidthBranch
    {
        Leading,  // 0 <= phi' <= alpha/2
        Middle,   // alpha/2 < phi' < pi - alpha/2
        Trailing, // pi - alpha/2 <= phi' <= pi
    };

    template <typename Scalar>
    BandwidthBranch select_branch(Scalar phi_prime, Scalar alpha)
    {
        const Scalar half = alpha / Scalar(2);
        phi_prime = detail::snap_phi_prime(phi_prime, alpha);
        if (phi_prime <= half)
            return BandwidthBranch::Leading;
        if (phi_prime < pi_v<Scalar> - half)
            return BandwidthBranch::Middle;
        return BandwidthBranch::Trailing;
    }

    // Evaluates one branch of the piecewise closed form regardless of where phi' lies.
    template <typename Scalar>
    Scalar bandwidth_branch(BandwidthBranch branch, Scalar psi, Scalar phi_prime, Scalar alpha)
    {
        using std::cos, std::sin;
        const Scalar k = k0_v<Scalar> * sin(psi);
        const Scalar half = alpha / Scalar(2);
        switch (branch)
        {
        case BandwidthBranch::Leading:
            return k * (Scalar(1) - cos(-half - phi_prime));
        case BandwidthBranch::Middle:
            return Scalar(2) * k * sin(half) * sin(phi_prime);
        case BandwidthBranch::Trailing:
            return k * (Scalar(1) + cos(half - phi_prime));
        }
        return Scalar(0);
    }

    // Closed-form local spatial bandwidth in terms of the receive orientation
    // (psi, phi') and the subtended angle alpha.
    template <typename Scalar>
    Scalar bandwidth_from_angles(Scalar psi, Scalar phi_prime, Scalar alpha)
    {
        if (!(alpha > Scalar(0)))
            return Scalar(0);
        return bandwidth_branch(select_branch(phi_prime, alpha), psi, phi_prime, alpha);
    }

    // phi' = (phi - beta) mod pi, in [0, pi).
    template <typename Scalar>
    Scalar reduce_phi_prime(Scalar phi, Scalar beta)
    {
        using std::fmod;
        Scalar r = fmod(phi - beta, pi_v<Scalar>);
        if (r < Scalar(0))
            r += pi_v<Scalar>;
        if (r >= pi_v<Scalar>)
            r = Scalar(0);
        return r;
    }

    template <typename Scalar>
    Scalar max_bandwidth(Scalar alpha)
    {
        using std::sin;
        if (alpha < Scalar(0) || alpha >= pi_v<Scalar>)
            throw std::invalid_argument("max_bandwidth: alpha outside [0, pi)");
        return Scalar(2) * k0_v<Scalar> * sin(alpha / Scalar(2));
    }

    namespace detail
    {
        template <typename Scalar>
        void require_unit(const Vec3T<Scalar> &v, const char *who)
        {
            using std::abs;
            if (!(abs(v.norm() - Scalar(1)) <= Scalar(1e-9)))
                throw std::invalid_argument(std::string(who) + ": orientation must be a unit vector");
        }
    }

    // Local spatial bandwidth at p for a receive array oriented along v, from the
    // closed form after mapping (p, v) into the canonical frame.
    template <typename Scalar>
    Scalar local_bandwidth_closed(const Vec3T<Scalar> &p, const Vec3T<Scalar> &v, Scalar Ls)
    {
        using std::acos, std::atan2, std::clamp;
        detail::require_unit(v, "local_bandwidth_closed");
        const CanonicalFrameT<Scalar> frame = canonicalize(p, v, Ls);
        const GeometryAnglesT<Scalar> angles = geometry_angles(frame.placement, Ls);
        if (!(angles.alpha > Scalar(0)))
            return Scalar(0);

        const Vec3T<Scalar> &u = frame.orientation;
        // Azimuth undefined along +-x; the sin(psi) factor makes the bandwidth zero there.
        if (u.y() == Scalar(0) && u.z() == Scalar(0))
            return Scalar(0);
        const Scalar psi = acos(clamp(u.x(), Scalar(-1), Scalar(1)));
        const Scalar phi = atan2(u.z(), u.y());
        return bandwidth_from_angles(psi, reduce_phi_prime(phi, angles.beta), angles.alpha);
    }

    // Definition-level bandwidth: max minus min spatial frequency over n uniformly
    // spaced sources on the transmit segment, endpoints included. Works in the
    // caller's frame with no canonicalisation.
    template <typename Scalar>
    Scalar local_bandwidth_oracle(const Vec3T<Scalar> &p, const Vec3T<Scalar> &v, Scalar Ls, int n_samples = 100000)
    {
        using std::max, std::min;
        if (n_samples < 2)
            throw std::invalid_argument("local_bandwidth_oracle: need at least two samples");
        Scalar hi = -std::numeric_limits<Scalar>::infinity();
        Scalar lo = std::numeric_limits<Scalar>::infinity();
        const Scalar step = Ls / Scalar(n_samples - 1);
        for (int i = 0; i < n_samples; ++i)
        {
            const Scalar z = i == n_samples - 1 ? Ls / Scalar(2) : -Ls / Scalar(2) + Scalar(i) * step;
            const Scalar f = spatial_frequency<Scalar>(p, Vec3T<Scalar>(Scalar(0), Scalar(0), z), v);
            hi = max(hi, f);
            lo = min(lo, f);
        }
        return hi - lo;
    }
}

#endif
