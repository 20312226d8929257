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

#include "nfdof/commands.hpp"

#include <algorithm>
#include <sstream>

using namespace nfdof;
using doctest::Approx;

namespace
{
    constexpr double pi = std::numbers::pi;
    const char *minimal = R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}})";

    std::vector<double> column(const SweepTable &t, const std::string &name)
    {
        const std::size_t c = t.column_index(name);
        std::vector<double> out;
        for (const auto &row : t.rows())
            out.push_back(row[c]);
        return out;
    }

    bool contains(const std::vector<std::string> &v, const std::string &s)
    {
        return std::find(v.begin(), v.end(), s) != v.end();
    }
}

TEST_CASE("parse_scenario applies and records defaults")
{
    const Scenario s = parse_scenario(minimal);
    CHECK(s.lambda_m == 0.01);
    CHECK(s.Ls == 100.0);
    CHECK(s.Lp == 100.0);
    CHECK(s.placement.R == 500.0);
    CHECK(s.placement.theta == 0.0);
    CHECK(s.orientation.kind == OrientationSpec::Kind::Optimal);
    CHECK(s.spacing_s == 0.5);
    CHECK(s.spacing_p == 0.5);
    CHECK(s.quad_points == 129);
    CHECK(s.grid.n_psi == 64);
    CHECK(s.grid.n_phi == 64);
    CHECK(contains(s.defaulted, "spacing_s_wavelengths"));
    CHECK(contains(s.defaulted, "quad_points"));
    CHECK(contains(s.defaulted, "grid"));
    CHECK(contains(s.defaulted, "orientation"));
    CHECK(s.thetas.size() == 3);
}

TEST_CASE("parse_scenario accepts unit-suffixed names")
{
    const Scenario s = parse_scenario(R"({
        "lambda_m": 0.01, "Ls_wavelengths": 100, "Lp_wavelengths": 50,
        "placement": {"R_wavelengths": 300, "theta_rad": 0.5},
        "orientation": {"psi_rad": 1.2, "phi_prime_rad": 0.4},
        "spacing_s_wavelengths": 0.25, "quad_points": 33, "grid": {"n_psi": 16, "n_phi": 20},
        "sweep": {"variable": "psi", "start": 0, "stop": 1.5, "count": 4}})");
    CHECK(s.Lp == 50.0);
    CHECK(s.placement.theta == 0.5);
    CHECK(s.orientation.kind == OrientationSpec::Kind::Relative);
    CHECK(s.orientation.psi == 1.2);
    CHECK(s.orientation.phi == 0.4);
    CHECK(s.spacing_s == 0.25);
    CHECK(s.quad_points == 33);
    CHECK(s.grid.n_phi == 20);
    REQUIRE(s.sweep.has_value());
    CHECK(s.sweep->values().size() == 4);
    CHECK(s.sweep->values().back() == 1.5);
    CHECK_FALSE(contains(s.defaulted, "quad_points"));
}

TEST_CASE("parse_scenario range errors")
{
    CHECK_THROWS_AS(parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": -0.1}})"),
                    RangeError);
    CHECK_THROWS_AS(parse_scenario(R"({"lambda_m": 0, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}})"),
                    RangeError);
    CHECK_THROWS_AS(parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 20, "theta": 1.5707963267948966}})"),
                    RangeError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}, "quad_points": 8})"),
        RangeError);
    try
    {
        parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 2}})");
        FAIL("expected RangeError");
    }
    catch (const RangeError &e)
    {
        CHECK(e.path() == "placement.theta_rad");
        CHECK(e.value() == 2.0);
    }
}

TEST_CASE("parse_scenario schema errors carry the field path")
{
    auto path_of = [](const char *doc) {
        try
        {
            parse_scenario(doc);
        }
        catch (const SchemaError &e)
        {
            return e.path();
        }
        return std::string("<no error>");
    };
    CHECK(path_of(R"({"Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}})") == "lambda_m");
    CHECK(path_of(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": "far", "theta": 0}})") ==
          "placement.R_wavelengths");
    CHECK(path_of(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}, "colour": 1})") ==
          "colour");
    CHECK(path_of(R"({"lambda_m": 0.01, "Ls": 100, "Ls_wavelengths": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}})") ==
          "Ls");
    CHECK(path_of(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0}, "orientation": "best"})") ==
          "orientation");
    CHECK(path_of(R"({"lambda_m": 0.01,)") == "<root>");
    CHECK(path_of(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0},
                      "spectra": [{"placement": {"R": 500}}]})") == "spectra[0].placement.theta_rad");
}

TEST_CASE("optimal orientation resolves to v_NP")
{
    const Scenario s = parse_scenario(
        R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 1.0471975511965976}, "orientation": "optimal"})");
    const Vec3 v = resolve_orientation(s, s.placement, s.orientation);
    CHECK((v - Vec3(0, -0.8638413220068705, 0.5037640026772678)).norm() < 1e-12);
}

TEST_CASE("scenario hash is stable and sensitive")
{
    const Scenario a = parse_scenario(minimal);
    const Scenario b = parse_scenario(minimal);
    CHECK(scenario_hash(a) == scenario_hash(b));
    CHECK(scenario_hash(a).size() == 16);
    Scenario c = a;
    c.placement.R = 501.0;
    CHECK(scenario_hash(a) != scenario_hash(c));
    // the effective document round-trips
    CHECK(scenario_hash(parse_scenario(to_json(a).dump())) == scenario_hash(a));
}

TEST_CASE("apply_overrides")
{
    Scenario s = parse_scenario(minimal);
    apply_overrides(s, 31, 65);
    CHECK(s.quad_points == 65);
    CHECK(s.localbw_grid == 31);
    CHECK(s.grid.n_psi == 31);
    CHECK(s.map.n_z == 31);
    CHECK_THROWS_AS(apply_overrides(s, std::nullopt, 64), RangeError);
    CHECK_THROWS_AS(apply_overrides(s, 4, std::nullopt), RangeError);
}

TEST_CASE("localbw sweep")
{
    Scenario s = parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 100, "theta": 0}})");
    const SweepTable t = cmd_localbw_sweep(s);
    CHECK(t.rows().size() == 181u * 181u);
    const auto w = column(t, "omega_over_k0");
    const double peak = *std::max_element(w.begin(), w.end());
    CHECK(*std::min_element(w.begin(), w.end()) >= 0.0);
    CHECK(peak <= 2.0);
    // alpha = 2 atan(0.5), peak 2 sin(alpha/2)
    CHECK(peak == Approx(0.8944271909999159).epsilon(1e-12));
    const auto &mid = t.rows()[90 * 181 + 90];
    CHECK(mid[0] == Approx(pi / 2));
    CHECK(mid[1] == Approx(pi / 2));
    CHECK(mid[2] == Approx(0.8944271909999159).epsilon(1e-12));
    // lexicographic order
    for (std::size_t i = 1; i < t.rows().size(); ++i)
    {
        const auto &a = t.rows()[i - 1], &b = t.rows()[i];
        CHECK((a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])));
    }
}

TEST_CASE("maxbw map")
{
    Scenario s = parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0},
        "map": {"y_min": -500, "y_max": 500, "z_min": -100, "z_max": 100, "n_y": 11, "n_z": 5}})");
    const SweepTable t = cmd_maxbw_map(s);
    CHECK(t.rows().size() == 55u);
    for (const auto &row : t.rows())
    {
        if (row[0] == 500.0 && row[1] == 0.0)
            CHECK(row[2] == Approx(0.19900743804199786).epsilon(1e-13));
        if (row[0] == -500.0 && row[1] == 0.0)
            CHECK(row[2] == Approx(0.19900743804199786).epsilon(1e-13));
        if (row[0] == 0.0 && row[1] == 0.0)
        {
            CHECK(row[2] == 2.0);
            CHECK(row[3] == 1.0);
        }
        if (row[0] == 0.0 && row[1] == 100.0)
        {
            CHECK(row[2] == 0.0);
            CHECK(row[3] == 0.0);
        }
        CHECK(row[2] >= 0.0);
        CHECK(row[2] <= 2.0);
    }

    Scenario far = s;
    far.map = {1e6, 1e6, 0, 0, 1, 1};
    CHECK(cmd_maxbw_map(far).rows()[0][2] < 1e-4);
}

TEST_CASE("kmax sweep")
{
    Scenario s = parse_scenario(R"({"lambda_m": 0.01, "Ls": 100, "Lp": 100, "placement": {"R": 500, "theta": 0},
        "grid": {"n_psi": 16, "n_phi": 16}, "quad_points": 33,
        "sweep": {"variable": "R", "start": 300, "stop": 700, "count": 3}})");
    const SweepTable t = cmd_kmax_sweep(s);
    REQUIRE(t.rows().size() == 9u);
    const auto R = column(t, "R"), th = column(t, "theta"), ak = column(t, "AK"), ek = column(t, "EK");
    for (std::size_t i = 0; i < 9; ++i)
    {
        CHECK(std::abs(ek[i] - ak[i]) / ak[i] <= 0.05);
        if (i % 3)
            CHECK(ak[i] < ak[i - 1]); // theta ordering at fixed R
        if (i >= 3)
            CHECK(ak[i] < ak[i - 3]); // decreasing in R
        if (R[i] == 500.0 && th[i] == 0.0)
            CHECK(ak[i] == Approx(19.90).epsilon(0.0005));
    }
}

TEST_CASE("svd spectra along a psi sweep")
{
    Scenario s = parse_scenario(R"({"lambda_m": 0.01, "Ls": 20, "Lp": 20, "placement": {"R": 100, "theta": 0.5},
        "grid": {"n_psi": 8, "n_phi": 8}, "quad_points": 17,
        "sweep": {"variable": "psi", "start": 0, "stop": 1.5707963267948966, "count": 3}})");
    const auto configs = spectrum_configs(s);
    REQUIRE(configs.size() == 3);
    CHECK(configs[2].orientation.kind == OrientationSpec::Kind::Relative);
    CHECK(configs[2].orientation.phi == Approx(pi / 2));

    const SweepTable t = cmd_svd_spectrum(s);
    CHECK(t.rows().size() == 3u * 41u);
    const auto id = column(t, "config_id"), sig = column(t, "sigma_normalized"), k2 = column(t, "K2");
    for (std::size_t i = 1; i < t.rows().size(); ++i)
        if (id[i] == id[i - 1])
            CHECK(sig[i] <= sig[i - 1]);
    CHECK(k2.front() == Approx(0.0));
    CHECK(k2.back() > k2[41]);
    const auto psi = column(t, "psi");
    CHECK(psi.back() == Approx(pi / 2).epsilon(1e-12));
}

TEST_CASE("CSV output contract")
{
    Scenario s = parse_scenario(minimal);
    s.localbw_grid = 3;
    SweepTable t = cmd_localbw_sweep(s);
    stamp_provenance(t, s, 7);
    std::ostringstream a, b;
    t.write_csv(a, "2026-01-01T00:00:00Z");
    t.write_csv(b, "2026-06-01T12:00:00Z");
    const std::string sa = a.str(), sb = b.str();
    CHECK(sa != sb);
    auto strip = [](std::string x) {
        const auto pos = x.find("# generated: ");
        return x.erase(pos, x.find('\n', pos) - pos + 1);
    };
    CHECK(strip(sa) == strip(sb));
    CHECK(sa.find('\r') == std::string::npos);
    CHECK(sa.find("# scenario_hash: fnv1a64:" + scenario_hash(s)) != std::string::npos);
    CHECK(sa.find("\npsi,phi_prime,omega_over_k0\n") != std::string::npos);
    // 17 significant digits
    CHECK(sa.find("1.5707963267948966") != std::string::npos);

    std::istringstream in(sa);
    std::string line;
    int data = 0;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        if (line.rfind("#", 0) == 0)
        {
            CHECK_FALSE(header_seen);
            continue;
        }
        if (!header_seen)
        {
            header_seen = true;
            continue;
        }
        CHECK(std::count(line.begin(), line.end(), ',') == 2);
        ++data;
    }
    CHECK(data == 9);

    CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("validation harness")
{
    const ValidationReport ok = cmd_validate(3, 40);
    CHECK(ok.passed());
    for (const auto &c : ok.checks)
        CHECK(c.cases > 0);

    const ValidationReport broken = cmd_validate(3, 40, ValidationOptions{true});
    CHECK_FALSE(broken.passed());

    const ValidationReport empty = cmd_validate(3, 0);
    CHECK(empty.passed());

    const ValidationReport again = cmd_validate(3, 40);
    REQUIRE(again.checks.size() == ok.checks.size());
    for (std::size_t i = 0; i < ok.checks.size(); ++i)
        CHECK(again.checks[i].worst == ok.checks[i].worst);

    std::ostringstream out;
    ok.print(out);
    CHECK(out.str().find("PASS closed_vs_oracle") != std::string::npos);
}
