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

#ifndef NFDOF_GEOMETRY_HPP
#define NFDOF_GEOMETRY_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nfdof/errors.hpp"

// All lengths are in wavelengths, all angles in radians. The transmit segment
// is centred at the origin and lies along +z; observation points are mapped
// into the first quadrant of the yOz plane before any bandwidth formula runs.

namespace nfdof
{
    template <typename Scalar>
    using Vec3T = Eigen::Matrix<Scalar, 3, 1>;
    using Vec3 = Vec3T<double>;

    template <typename Scalar>
    inline constexpr Scalar pi_v = std::numbers::pi_v<Scalar>;

    // Wavenumber with lengths measured in wavelengths.
    template <typename Scalar>
    inline constexpr Scalar k0_v = Scalar(2) * std::numbers::pi_v<Scalar>;
    inline constexpr double k0 = k0_v<double>;

    // Half-width of the band around the transmit segment treated as "on the segment".
    template <typename Scalar>
    inline constexpr Scalar segment_tolerance_v = Scalar(1e-9);

    template <typename Scalar>
    struct ArraySegmentT
    {
        Vec3T<Scalar> center = Vec3T<Scalar>::Zero();
        Vec3T<Scalar> direction = Vec3T<Scalar>::UnitZ();
        Scalar length = Scalar(0);

        // Point at signed offset l from the centre along the array axis.
        Vec3T<Scalar> at(Scalar l) const { return center + l * direction; }
    };
    using ArraySegment = ArraySegmentT<double>;

    template <typename Scalar>
    ArraySegmentT<Scalar> transmit_segment(Scalar Ls)
    {
        return {Vec3T<Scalar>::Zero(), Vec3T<Scalar>::UnitZ(), Ls};
    }

    // Receive-array centre (0, R cos theta, R sin theta).
    template <typename Scalar>
    struct PolarPlacementT
    {
        Scalar R = Scalar(0);
        Scalar theta = Scalar(0);

        Vec3T<Scalar> point() const
        {
            using std::cos, std::sin;
            return {Scalar(0), R * cos(theta), R * sin(theta)};
        }
    };
    using PolarPlacement = PolarPlacementT<double>;

    // alpha: angle subtended at the observation point by the transmit endpoints.
    // beta: tilt of the fan bisector from +y. Propagation angles span [beta - alpha/2, beta + alpha/2].
    template <typename Scalar>
    struct GeometryAnglesT
    {
        Scalar alpha = Scalar(0);
        Scalar beta = Scalar(0);
    };
    using GeometryAngles = GeometryAnglesT<double>;

    // v(psi, phi) = (cos psi, sin psi cos phi, sin psi sin phi).
    template <typename Scalar>
    struct OrientationAnglesT
    {
        Scalar psi = Scalar(0);
        Scalar phi = Scalar(0);
    };
    using OrientationAngles = OrientationAnglesT<double>;

    template <typename Scalar>
    Vec3T<Scalar> orientation_vector(const OrientationAnglesT<Scalar> &o)
    {
        using std::cos, std::sin;
        const Scalar s = sin(o.psi);
        return {cos(o.psi), s * cos(o.phi), s * sin(o.phi)};
    }

    // Rotation about z followed by an optional z -> -z mirror. Both fix the
    // transmit segment setwise, so every inner product in the bandwidth
    // definition is preserved.
    template <typename Scalar>
    struct CanonicalTransformT
    {
        Scalar z_rotation = Scalar(0);
        bool z_mirror = false;

        Vec3T<Scalar> apply(const Vec3T<Scalar> &u) const
        {
            using std::cos, std::sin;
            const Scalar c = cos(z_rotation), s = sin(z_rotation);
            Vec3T<Scalar> out(c * u.x() - s * u.y(), s * u.x() + c * u.y(), u.z());
            if (z_mirror)
                out.z() = -out.z();
            return out;
        }
    };
    using CanonicalTransform = CanonicalTransformT<double>;

    template <typename Scalar>
    struct CanonicalFrameT
    {
        PolarPlacementT<Scalar> placement;
        Vec3T<Scalar> orientation;
        CanonicalTransformT<Scalar> transform;
    };
    using CanonicalFrame = CanonicalFrameT<double>;

    template <typename Scalar>
    bool on_transmit_segment(const Vec3T<Scalar> &p, Scalar Ls)
    {
        using std::abs, std::hypot;
        const Scalar tol = segment_tolerance_v<Scalar>;
        return hypot(p.x(), p.y()) <= tol && abs(p.z()) <= Ls / Scalar(2) + tol;
    }

    template <typename Scalar>
    CanonicalFrameT<Scalar> canonicalize(const Vec3T<Scalar> &p, const Vec3T<Scalar> &v, Scalar Ls)
    {
        using std::atan2, std::hypot;
        if (!(Ls > Scalar(0)))
            throw std::invalid_argument("canonicalize: transmit length must be positive");
        if (on_transmit_segment(p, Ls))
            throw DegeneratePoint("canonicalize: observation point lies on the transmit segment");

        CanonicalTransformT<Scalar> t;
        const Scalar rho = hypot(p.x(), p.y());
        t.z_rotation = rho > Scalar(0) ? atan2(p.x(), p.y()) : Scalar(0);
        t.z_mirror = p.z() < Scalar(0);

        Vec3T<Scalar> q = t.apply(p);
        q.x() = Scalar(0);
        q.y() = rho;

        CanonicalFrameT<Scalar> frame;
        frame.placement.R = q.norm();
        frame.placement.theta = atan2(q.z(), q.y());
        frame.orientation = t.apply(v);
        frame.transform = t;
        return frame;
    }

    template <typename Scalar>
    GeometryAnglesT<Scalar> geometry_angles(const PolarPlacementT<Scalar> &placement, Scalar Ls)
    {
        using std::atan2, std::cos, std::sin, std::max;
        const Scalar half_pi = pi_v<Scalar> / Scalar(2);
        if (!(Ls > Scalar(0)))
            throw std::invalid_argument("geometry_angles: transmit length must be positive");
        if (!(placement.R > Scalar(0)) || placement.theta < Scalar(-1e-12) || placement.theta > half_pi + Scalar(1e-12))
            throw std::invalid_argument("geometry_angles: placement outside the first quadrant of yOz");

        const Scalar y = max(placement.R * cos(placement.theta), Scalar(0));
        const Scalar z = placement.R * sin(placement.theta);
        const Scalar tol = segment_tolerance_v<Scalar>;
        const Scalar half = Ls / Scalar(2);

        if (y <= tol)
        {
            if (z <= half + tol)
                throw DegeneratePoint("geometry_angles: observation point lies on the transmit segment");
            // On the axis beyond the tip: every propagation direction is +z.
            return {Scalar(0), half_pi};
        }

        const Scalar gamma_a = atan2(z - half, y);
        const Scalar gamma_b = atan2(z + half, y);
        return {max(gamma_b - gamma_a, Scalar(0)), (gamma_a + gamma_b) / Scalar(2)};
    }

    // Angle APB from the normalised dot product. Independent of geometry_angles.
    template <typename Scalar>
    Scalar subtended_angle_oracle(const Vec3T<Scalar> &P, const Vec3T<Scalar> &A, const Vec3T<Scalar> &B)
    {
        using std::acos, std::clamp;
        const Vec3T<Scalar> a = A - P;
        const Vec3T<Scalar> b = B - P;
        const Scalar na = a.norm(), nb = b.norm();
        if (na == Scalar(0) || nb == Scalar(0))
            throw DegeneratePoint("subtended_angle_oracle: coincident points");
        return acos(clamp(a.dot(b) / (na * nb), Scalar(-1), Scalar(1)));
    }

    // In-plane direction perpendicular to the fan bisector; maximises the local bandwidth.
    template <typename Scalar>
    Vec3T<Scalar> optimal_orientation(const GeometryAnglesT<Scalar> &angles)
    {
        using std::cos, std::sin;
        if (!(angles.alpha > Scalar(0)))
            throw DegenerateGeometry("optimal_orientation: subtended angle is zero");
        return {Scalar(0), -sin(angles.beta), cos(angles.beta)};
    }
}

#endif
