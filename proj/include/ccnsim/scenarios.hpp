// Copyright 2026 The ccnsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <span>
#include <stdexcept>
#include <vector>

#include "ccnsim/dynamics.hpp"
#include "ccnsim/observables.hpp"
#include "ccnsim/spin_model.hpp"

namespace ccnsim {

/// Norm tolerance every experiment must meet.
inline constexpr double kNormTolerance = 1e-6;

/// Basis state |i2 i1 i0> at t = 0.
inline RotatingState initial_digital(int i2, int i1, int i0) {
    RotatingState s;
    s.d[BasisIndex::from_bits(i2, i1, i0).value()] = 1.0;
    return s;
}

/// Real superposition used to exercise all eight gate inputs.
inline RotatingState initial_superposition() {
    const double r8 = std::sqrt(8.0);
    RotatingState s;
    s.d = {Complex(2.0 / (3.0 * r8)),           Complex(std::sqrt(14.0) / (3.0 * r8)),
           Complex(1.0 / (3.0 * r8)),           Complex(std::sqrt(17.0) / (3.0 * r8)),
           Complex(3.0 / (4.0 * r8)),           Complex(std::sqrt(23.0) / (4.0 * r8)),
           Complex(1.0 / (2.0 * r8)),           Complex(std::sqrt(7.0) / (2.0 * r8))};
    return s;
}

struct SampleObservables {
    double t = 0.0;
    std::array<double, kDim> probabilities{};
    SpinExpectations spin;  // transverse parts taken in the lab frame
    double norm_error = 0.0;
};

struct ExperimentResult {
    Trajectory trajectory;
    std::vector<SampleObservables> observables;
    GateFidelity fidelity;  // at t = pulse duration, rotating frame
    double max_norm_drift = 0.0;
    ChainParams params;
    PulseSpec pulse;

    bool norm_ok() const { return max_norm_drift <= kNormTolerance; }
};

inline SampleObservables observe(const RotatingState &s, const ChainParams &p) {
    SampleObservables o;
    o.t = s.t;
    o.probabilities = probabilities(s);
    o.spin = spin_expectations(to_lab(s, p));
    o.norm_error = std::abs(squared_norm(s.d) - 1.0);
    return o;
}

/// Runs one pulse and scores the final state against the ideal Toffoli
/// applied to `initial`.
inline ExperimentResult run_experiment(const ChainParams &p, const PulseSpec &pulse, const RotatingState &initial,
                                       const IntegratorConfig &cfg) {
    ExperimentResult r;
    r.trajectory = evolve(initial, pulse, p, cfg);
    r.observables.reserve(r.trajectory.samples.size());
    for (const auto &s : r.trajectory.samples) {
        r.observables.push_back(observe(s, p));
    }
    r.fidelity = fidelity(apply_ideal_ccn(initial), r.trajectory.final_state());
    r.max_norm_drift = r.trajectory.max_norm_drift;
    r.params = p;
    r.pulse = pulse;
    return r;
}

/// The resonant pi pulse on |110> <-> |111> for the given parameters.
inline PulseSpec ccn_pulse(const ChainParams &p) {
    return {.frequency = ccn_resonance(p), .phase = 0.0, .duration = pi_pulse_duration(p)};
}

inline ExperimentResult run_ccn_experiment(const ChainParams &p, const RotatingState &initial,
                                           const IntegratorConfig &cfg) {
    return run_experiment(p, ccn_pulse(p), initial, cfg);
}

struct SweepRecord {
    double j_prime = 0.0;
    double j_ratio = 0.0;
    std::array<double, kDim> final_probabilities{};
    GateFidelity fidelity;
    double max_norm_drift = 0.0;

    double p(int k) const { return final_probabilities[k]; }
};

struct SweepResult {
    std::vector<SweepRecord> records;  // ascending j_prime
};

inline const std::array<double, 6> kDefaultJPrimes{0.0, 0.02, 0.04, 0.06, 0.08, 0.1};

inline SweepRecord sweep_point(const ChainParams &base, double j_prime, const RotatingState &initial,
                               const IntegratorConfig &cfg) {
    ChainParams p = base;
    p.j_prime = j_prime;
    const ExperimentResult r = run_ccn_experiment(p, initial, cfg);
    return {.j_prime = j_prime,
            .j_ratio = j_prime / p.j,
            .final_probabilities = r.observables.back().probabilities,
            .fidelity = r.fidelity,
            .max_norm_drift = r.max_norm_drift};
}

/// One CCN experiment per J' value. Resonance and pulse length are rebuilt for
/// each point; points run concurrently and share no state.
inline SweepResult sweep_jprime(const ChainParams &base, std::span<const double> j_prime_values,
                                const RotatingState &initial, const IntegratorConfig &cfg) {
    if (j_prime_values.empty()) {
        throw std::invalid_argument("sweep_jprime: j_prime list is empty");
    }
    std::vector<double> values(j_prime_values.begin(), j_prime_values.end());
    for (double v : values) {
        if (!(v >= 0)) {
            throw std::invalid_argument("sweep_jprime: j_prime values must be >= 0");
        }
    }
    std::sort(values.begin(), values.end());

    std::vector<std::future<SweepRecord>> pending;
    pending.reserve(values.size());
    for (double v : values) {
        pending.push_back(std::async(std::launch::async, sweep_point, base, v, initial, cfg));
    }
    SweepResult out;
    out.records.reserve(values.size());
    for (auto &f : pending) {
        out.records.push_back(f.get());
    }
    return out;
}

}  // namespace ccnsim
