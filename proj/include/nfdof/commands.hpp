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

#ifndef NFDOF_COMMANDS_HPP
#define NFDOF_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nfdof/scenario.hpp"
#include "nfdof/sweep_table.hpp"

namespace nfdof
{
    // Local bandwidth over the receive orientation grid (psi, phi') in [0, pi]^2.
    // Columns: psi, phi_prime, omega_over_k0.
    SweepTable cmd_localbw_sweep(const Scenario &scenario);

    // Maximum local bandwidth over the yOz plane.
    // Columns: y, z, omega_max_over_k0, on_segment. Points on the transmit
    // segment report the alpha -> pi limit 2.0 and on_segment = 1.
    SweepTable cmd_maxbw_map(const Scenario &scenario);

    // Centre-approximation maximum (AK) and searched maximum (EK) of the K number
    // over R (from an R sweep, default 100..1000 in 19 steps) and thetas_rad.
    // Columns: R, theta, AK, EK, EK_psi, EK_phi_prime.
    SweepTable cmd_kmax_sweep(const Scenario &scenario);

    // Singular-value spectra of the LoS channel for each configuration in
    // "spectra", or along a psi / phi_prime sweep, or at the scenario's own
    // placement and orientation.
    SweepTable cmd_svd_spectrum(const Scenario &scenario);

    // Configurations cmd_svd_spectrum will evaluate, in output order.
    std::vector<SpectrumConfig> spectrum_configs(const Scenario &scenario);

    struct ValidationOptions
    {
        // Test hook: perturbs the closed form so the oracle comparisons must fail.
        bool corrupt_closed_form = false;
    };

    struct ValidationCheck
    {
        std::string name;
        bool passed = true;
        int cases = 0;
        double worst = 0.0; // largest observed violation measure
        std::string detail;
    };

    struct ValidationReport
    {
        std::vector<ValidationCheck> checks;

        bool passed() const;
        void print(std::ostream &out) const;
    };

    // Oracle-equivalence and invariant suites on n_cases random configurations.
    // Deterministic for a given seed.
    ValidationReport cmd_validate(std::uint64_t seed, int n_cases, const ValidationOptions &options = {});

    // Common provenance lines (scenario hash, defaults, seed).
    void stamp_provenance(SweepTable &table, const Scenario &scenario, std::uint64_t seed);
}

#endif
