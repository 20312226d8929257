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

#include "nfdof/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>
#include <sstream>

namespace nfdof
{
    using nlohmann::json;

    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr double angle_slack = 1e-12;

        std::string join(const std::string &base, const std::string &key)
        {
            return base.empty() ? key : base + "." + key;
        }

        // Typed field access on one JSON object with alias names, path-aware
        // errors and unknown-key detection.
        class ObjectReader
        {
        public:
            ObjectReader(const json &obj, std::string path, std::vector<std::string> &defaulted)
                : obj_(obj), path_(std::move(path)), defaulted_(defaulted)
            {
                if (!obj_.is_object())
                    throw SchemaError(path_.empty() ? "<root>" : path_, "expected an object");
            }

            const json *find(std::initializer_list<const char *> names)
            {
                const json *hit = nullptr;
                for (const char *name : names)
                {
                    auto it = obj_.find(name);
                    if (it == obj_.end())
                        continue;
                    if (hit)
                        throw SchemaError(join(path_, name), "given together with an alias");
                    hit = &*it;
                    used_.insert(name);
                }
                return hit;
            }

            std::string path_of(std::initializer_list<const char *> names) const
            {
                return join(path_, *names.begin());
            }

            double number(std::initializer_list<const char *> names)
            {
                const json *v = find(names);
                if (!v)
                    throw SchemaError(path_of(names), "required field is missing");
                return as_number(*v, path_of(names));
            }

            double number_or(std::initializer_list<const char *> names, double fallback)
            {
                const json *v = find(names);
                if (!v)
                {
                    defaulted_.push_back(path_of(names));
                    return fallback;
                }
                return as_number(*v, path_of(names));
            }

            int integer_or(std::initializer_list<const char *> names, int fallback)
            {
                const json *v = find(names);
                if (!v)
                {
                    defaulted_.push_back(path_of(names));
                    return fallback;
                }
                if (!v->is_number_integer())
                    throw SchemaError(path_of(names), "expected an integer");
                return v->get<int>();
            }

            void finish() const
            {
                for (auto it = obj_.begin(); it != obj_.end(); ++it)
                    if (!used_.count(it.key()))
                        throw SchemaError(join(path_, it.key()), "unknown field");
            }

            const std::string &path() const { return path_; }
            std::vector<std::string> &defaulted() { return defaulted_; }

        private:
            static double as_number(const json &v, const std::string &path)
            {
                if (!v.is_number())
                    throw SchemaError(path, "expected a number");
                const double x = v.get<double>();
                if (!std::isfinite(x))
                    throw RangeError(path, x, "must be finite");
                return x;
            }

            const json &obj_;
            std::string path_;
            std::vector<std::string> &defaulted_;
            std::set<std::string> used_;
        };

        void require_positive(double x, const std::string &path)
        {
            if (!(x > 0.0))
                throw RangeError(path, x, "must be positive");
        }

        PolarPlacement read_placement(ObjectReader &parent, std::initializer_list<const char *> names, double Ls)
        {
            const json *node = parent.find(names);
            const std::string path = parent.path_of(names);
            if (!node)
                throw SchemaError(path, "required field is missing");
            ObjectReader r(*node, path, parent.defaulted());
            PolarPlacement p;
            p.R = r.number({"R_wavelengths", "R"});
            p.theta = r.number({"theta_rad", "theta"});
            r.finish();
            require_positive(p.R, r.path_of({"R_wavelengths"}));
            if (p.theta < -angle_slack || p.theta > pi / 2 + angle_slack)
                throw RangeError(r.path_of({"theta_rad"}), p.theta, "must lie in [0, pi/2]");
            p.theta = std::clamp(p.theta, 0.0, pi / 2);
            try
            {
                geometry_angles(p, Ls);
            }
            catch (const DegeneratePoint &)
            {
                throw RangeError(r.path_of({"R_wavelengths"}), p.R, "placement lies on the transmit segment");
            }
            return p;
        }

        OrientationSpec read_orientation(const json &node, const std::string &path, std::vector<std::string> &defaulted)
        {
            OrientationSpec o;
            if (node.is_string())
            {
                const auto s = node.get<std::string>();
                if (s == "optimal")
                    o.kind = OrientationSpec::Kind::Optimal;
                else if (s == "searched" || s == "ek")
                    o.kind = OrientationSpec::Kind::Searched;
                else
                    throw SchemaError(path, "expected \"optimal\", \"searched\" or an angle object, got \"" + s + "\"");
                return o;
            }
            ObjectReader r(node, path, defaulted);
            o.psi = r.number({"psi_rad", "psi"});
            const json *phi = r.find({"phi_rad", "phi"});
            const json *phi_prime = r.find({"phi_prime_rad", "phi_prime"});
            if (phi && phi_prime)
                throw SchemaError(path, "give either phi_rad or phi_prime_rad, not both");
            if (!phi && !phi_prime)
                throw SchemaError(join(path, "phi_rad"), "required field is missing");
            const json &angle = phi ? *phi : *phi_prime;
            const std::string angle_path = join(path, phi ? "phi_rad" : "phi_prime_rad");
            if (!angle.is_number())
                throw SchemaError(angle_path, "expected a number");
            o.kind = phi ? OrientationSpec::Kind::Absolute : OrientationSpec::Kind::Relative;
            o.phi = angle.get<double>();
            r.finish();
            if (!(o.psi >= -angle_slack && o.psi <= pi + angle_slack))
                throw RangeError(join(path, "psi_rad"), o.psi, "must lie in [0, pi]");
            if (!std::isfinite(o.phi))
                throw RangeError(angle_path, o.phi, "must be finite");
            o.psi = std::clamp(o.psi, 0.0, pi);
            return o;
        }

        json orientation_json(const OrientationSpec &o)
        {
            switch (o.kind)
            {
            case OrientationSpec::Kind::Optimal:
                return "optimal";
            case OrientationSpec::Kind::Searched:
                return "searched";
            case OrientationSpec::Kind::Absolute:
                return json{{"psi_rad", o.psi}, {"phi_rad", o.phi}};
            case OrientationSpec::Kind::Relative:
                return json{{"psi_rad", o.psi}, {"phi_prime_rad", o.phi}};
            }
            return nullptr;
        }

        json placement_json(const PolarPlacement &p)
        {
            return json{{"R_wavelengths", p.R}, {"theta_rad", p.theta}};
        }
    }

    std::vector<double> SweepSpec::values() const
    {
        std::vector<double> out(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            out[i] = count == 1 ? start : (i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
        return out;
    }

    Scenario parse_scenario(std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw SchemaError("<root>", std::string("malformed JSON: ") + e.what());
        }

        Scenario s;
        ObjectReader root(doc, "", s.defaulted);

        s.lambda_m = root.number({"lambda_m"});
        require_positive(s.lambda_m, "lambda_m");
        s.Ls = root.number({"Ls_wavelengths", "Ls"});
        require_positive(s.Ls, "Ls_wavelengths");
        s.Lp = root.number({"Lp_wavelengths", "Lp"});
        require_positive(s.Lp, "Lp_wavelengths");
        s.placement = read_placement(root, {"placement"}, s.Ls);

        if (const json *o = root.find({"orientation"}))
            s.orientation = read_orientation(*o, "orientation", s.defaulted);
        else
            s.defaulted.push_back("orientation");

        s.spacing_s = root.number_or({"spacing_s_wavelengths", "spacing_s"}, 0.5);
        require_positive(s.spacing_s, "spacing_s_wavelengths");
        s.spacing_p = root.number_or({"spacing_p_wavelengths", "spacing_p"}, 0.5);
        require_positive(s.spacing_p, "spacing_p_wavelengths");

        s.quad_points = root.integer_or({"quad_points"}, default_quad_points);
        if (s.quad_points < 3 || s.quad_points % 2 == 0)
            throw RangeError("quad_points", s.quad_points, "must be odd and at least 3");

        if (const json *g = root.find({"grid"}))
        {
            ObjectReader r(*g, "grid", s.defaulted);
            s.grid.n_psi = r.integer_or({"n_psi"}, 64);
            s.grid.n_phi = r.integer_or({"n_phi"}, 64);
            r.finish();
        }
        else
            s.defaulted.push_back("grid");
        if (s.grid.n_psi < 8)
            throw RangeError("grid.n_psi", s.grid.n_psi, "must be at least 8");
        if (s.grid.n_phi < 8)
            throw RangeError("grid.n_phi", s.grid.n_phi, "must be at least 8");

        s.localbw_grid = root.integer_or({"localbw_grid"}, 181);
        if (s.localbw_grid < 2)
            throw RangeError("localbw_grid", s.localbw_grid, "must be at least 2");

        s.edof_tau = root.number_or({"edof_tau"}, 0.1);
        if (!(s.edof_tau > 0.0 && s.edof_tau <= 1.0))
            throw RangeError("edof_tau", s.edof_tau, "must lie in (0, 1]");

        if (const json *sw = root.find({"sweep"}))
        {
            ObjectReader r(*sw, "sweep", s.defaulted);
            SweepSpec spec;
            const json *var = r.find({"variable"});
            if (!var || !var->is_string())
                throw SchemaError("sweep.variable", "expected one of R, theta, psi, phi_prime");
            spec.variable = var->get<std::string>();
            if (spec.variable != "R" && spec.variable != "theta" && spec.variable != "psi" && spec.variable != "phi_prime")
                throw SchemaError("sweep.variable", "expected one of R, theta, psi, phi_prime");
            spec.start = r.number({"start"});
            spec.stop = r.number({"stop"});
            spec.count = r.integer_or({"count"}, 7);
            r.finish();
            if (spec.count < 1)
                throw RangeError("sweep.count", spec.count, "must be at least 1");
            if (spec.variable == "R")
            {
                require_positive(spec.start, "sweep.start");
                require_positive(spec.stop, "sweep.stop");
            }
            s.sweep = spec;
        }

        if (const json *t = root.find({"thetas_rad", "thetas"}))
        {
            if (!t->is_array() || t->empty())
                throw SchemaError("thetas_rad", "expected a non-empty array of angles");
            for (std::size_t i = 0; i < t->size(); ++i)
            {
                const std::string path = "thetas_rad[" + std::to_string(i) + "]";
                if (!(*t)[i].is_number())
                    throw SchemaError(path, "expected a number");
                const double th = (*t)[i].get<double>();
                if (!(th >= -angle_slack && th <= pi / 2 + angle_slack))
                    throw RangeError(path, th, "must lie in [0, pi/2]");
                s.thetas.push_back(std::clamp(th, 0.0, pi / 2));
            }
        }
        else
        {
            s.defaulted.push_back("thetas_rad");
            s.thetas = {0.0, pi / 6, pi / 3};
        }

        if (const json *m = root.find({"map"}))
        {
            ObjectReader r(*m, "map", s.defaulted);
            s.map.y_min = r.number_or({"y_min_wavelengths", "y_min"}, s.map.y_min);
            s.map.y_max = r.number_or({"y_max_wavelengths", "y_max"}, s.map.y_max);
            s.map.z_min = r.number_or({"z_min_wavelengths", "z_min"}, s.map.z_min);
            s.map.z_max = r.number_or({"z_max_wavelengths", "z_max"}, s.map.z_max);
            s.map.n_y = r.integer_or({"n_y"}, s.map.n_y);
            s.map.n_z = r.integer_or({"n_z"}, s.map.n_z);
            r.finish();
        }
        else
            s.defaulted.push_back("map");
        if (!(s.map.y_min <= s.map.y_max))
            throw RangeError("map.y_max_wavelengths", s.map.y_max, "must not be below y_min");
        if (!(s.map.z_min <= s.map.z_max))
            throw RangeError("map.z_max_wavelengths", s.map.z_max, "must not be below z_min");
        if (s.map.n_y < 1)
            throw RangeError("map.n_y", s.map.n_y, "must be at least 1");
        if (s.map.n_z < 1)
            throw RangeError("map.n_z", s.map.n_z, "must be at least 1");

        if (const json *sp = root.find({"spectra"}))
        {
            if (!sp->is_array())
                throw SchemaError("spectra", "expected an array of configurations");
            for (std::size_t i = 0; i < sp->size(); ++i)
            {
                const std::string path = "spectra[" + std::to_string(i) + "]";
                ObjectReader r((*sp)[i], path, s.defaulted);
                SpectrumConfig c;
                c.placement = read_placement(r, {"placement"}, s.Ls);
                if (const json *o = r.find({"orientation"}))
                    c.orientation = read_orientation(*o, join(path, "orientation"), s.defaulted);
                else
                    c.orientation.kind = OrientationSpec::Kind::Searched;
                r.finish();
                s.spectra.push_back(c);
            }
        }

        root.finish();
        return s;
    }

    Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw SchemaError("<file>", "cannot open scenario file " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str());
    }

    json to_json(const Scenario &s)
    {
        json j;
        j["lambda_m"] = s.lambda_m;
        j["Ls_wavelengths"] = s.Ls;
        j["Lp_wavelengths"] = s.Lp;
        j["placement"] = placement_json(s.placement);
        j["orientation"] = orientation_json(s.orientation);
        j["spacing_s_wavelengths"] = s.spacing_s;
        j["spacing_p_wavelengths"] = s.spacing_p;
        j["quad_points"] = s.quad_points;
        j["grid"] = {{"n_psi", s.grid.n_psi}, {"n_phi", s.grid.n_phi}};
        j["localbw_grid"] = s.localbw_grid;
        j["edof_tau"] = s.edof_tau;
        if (s.sweep)
            j["sweep"] = {{"variable", s.sweep->variable},
                          {"start", s.sweep->start},
                          {"stop", s.sweep->stop},
                          {"count", s.sweep->count}};
        j["thetas_rad"] = s.thetas;
        j["map"] = {{"y_min_wavelengths", s.map.y_min}, {"y_max_wavelengths", s.map.y_max},
                    {"z_min_wavelengths", s.map.z_min}, {"z_max_wavelengths", s.map.z_max},
                    {"n_y", s.map.n_y},                 {"n_z", s.map.n_z}};
        json spectra = json::array();
        for (const auto &c : s.spectra)
            spectra.push_back({{"placement", placement_json(c.placement)}, {"orientation", orientation_json(c.orientation)}});
        j["spectra"] = spectra;
        return j;
    }

    std::string scenario_hash(const Scenario &scenario)
    {
        const std::string text = to_json(scenario).dump();
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char c : text)
        {
            h ^= c;
            h *= 1099511628211ull;
        }
        char out[17];
        std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
        return out;
    }

    void apply_overrides(Scenario &scenario, std::optional<int> grid, std::optional<int> quad)
    {
        if (quad)
        {
            if (*quad < 3 || *quad % 2 == 0)
                throw RangeError("--quad", *quad, "must be odd and at least 3");
            scenario.quad_points = *quad;
        }
        if (grid)
        {
            if (*grid < 8)
                throw RangeError("--grid", *grid, "must be at least 8");
            scenario.grid = {*grid, *grid};
            scenario.localbw_grid = *grid;
            scenario.map.n_y = *grid;
            scenario.map.n_z = *grid;
        }
    }

    Vec3 resolve_orientation(const Scenario &scenario, const PolarPlacement &placement, const OrientationSpec &spec)
    {
        const GeometryAngles angles = geometry_angles(placement, scenario.Ls);
        switch (spec.kind)
        {
        case OrientationSpec::Kind::Optimal:
            return optimal_orientation(angles);
        case OrientationSpec::Kind::Searched:
            return maximize_k(placement, scenario.Lp, scenario.Ls, scenario.grid, scenario.quad_points).direction();
        case OrientationSpec::Kind::Absolute:
            return orientation_vector(OrientationAngles{spec.psi, spec.phi});
        case OrientationSpec::Kind::Relative:
            return orientation_vector(OrientationAngles{spec.psi, angles.beta + spec.phi});
        }
        return Vec3::UnitZ();
    }
}
