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

#include "ccnsim/scenarios.hpp"

#include <gtest/gtest.h>

using namespace ccnsim;

namespace {

// Coarser than the default step so the suite stays quick; the acceptance
// suite covers the default step.
const IntegratorConfig kFast{.dt = 1e-5, .sample_stride = 500};

ChainParams with_jprime(double jp) {
    ChainParams p;
    p.j_prime = jp;
    return p;
}

}  // namespace

TEST(initial_digital, unit_vectors) {
    EXPECT_EQ(initial_digital(1, 1, 0).d[6], Complex(1.0));
    EXPECT_EQ(initial_digital(0, 0, 0).d[0], Complex(1.0));
    EXPECT_EQ(initial_digital(1, 1, 1).d[7], Complex(1.0));
    EXPECT_EQ(squared_norm(initial_digital(1, 0, 1).d), 1.0);
    EXPECT_EQ(initial_digital(1, 1, 0).t, 0.0);
    EXPECT_THROW(initial_digital(1, 2, 0), std::invalid_argument);
}

TEST(initial_superposition, amplitudes) {
    const auto s = initial_superposition();
    EXPECT_DOUBLE_EQ(s.d[6].real(), 1.0 / (2.0 * std::sqrt(8.0)));
    EXPECT_DOUBLE_EQ(s.d[3].real(), std::sqrt(17.0) / (3.0 * std::sqrt(8.0)));
    for (const auto &a : s.d) EXPECT_EQ(a.imag(), 0.0);
    EXPECT_NEAR(squared_norm(s.d), 1.0, 1e-15);
}

TEST(run_ccn_experiment, digital_input_lands_on_i111) {
    const auto r = run_ccn_experiment(with_jprime(0.1), initial_digital(1, 1, 0), kFast);
    const auto &d = r.trajectory.final_state().d;
    EXPECT_NEAR(d[6].real(), 0.0, 1e-2);
    EXPECT_NEAR(d[6].imag(), 0.0, 1e-2);
    EXPECT_NEAR(d[7].imag(), 1.0, 1e-2);
    EXPECT_GE(r.fidelity.modulus(), 0.99);
    EXPECT_TRUE(r.norm_ok());
    EXPECT_EQ(r.observables.size(), r.trajectory.samples.size());
    EXPECT_EQ(r.trajectory.final_state().t, pi_pulse_duration(r.params));
    EXPECT_EQ(r.pulse.frequency, ccn_resonance(r.params));
}

TEST(run_ccn_experiment, superposition_changes_only_target_spin) {
    const auto r = run_ccn_experiment(with_jprime(0.1), initial_superposition(), kFast);
    const auto &first = r.observables.front().spin.iz;
    const auto &last = r.observables.back().spin.iz;
    EXPECT_GT(std::abs(last[0] - first[0]), 0.1);
    EXPECT_LT(std::abs(last[1] - first[1]), 1e-2);
    EXPECT_LT(std::abs(last[2] - first[2]), 1e-2);
    for (const auto &o : r.observables) {
        double sum = 0.0;
        for (double p : o.probabilities) sum += p;
        EXPECT_NEAR(sum, 1.0, 1e-6);
    }
}

TEST(run_ccn_experiment, degenerate_coupling_also_drives_cn_pair) {
    const auto r = run_ccn_experiment(with_jprime(0.0), initial_superposition(), kFast);
    const auto &p0 = r.observables.front().probabilities;
    const auto &p1 = r.observables.back().probabilities;
    // the 2 <-> 3 populations swap
    EXPECT_NEAR(p1[2], p0[3], 2e-2);
    EXPECT_NEAR(p1[3], p0[2], 2e-2);
}

TEST(sweep_jprime, single_point_matches_direct_run) {
    const double one[] = {0.1};
    const auto sweep = sweep_jprime(ChainParams{}, one, initial_superposition(), kFast);
    ASSERT_EQ(sweep.records.size(), 1u);
    const auto direct = run_ccn_experiment(with_jprime(0.1), initial_superposition(), kFast);
    const auto &rec = sweep.records[0];
    EXPECT_EQ(rec.fidelity.value, direct.fidelity.value);
    EXPECT_EQ(rec.final_probabilities, direct.observables.back().probabilities);
    EXPECT_EQ(rec.j_ratio, 0.1 / 5.0);
}

TEST(sweep_jprime, records_sorted_and_reproducible) {
    const double values[] = {0.1, 0.0, 0.04};
    const auto sweep = sweep_jprime(ChainParams{}, values, initial_superposition(), kFast);
    ASSERT_EQ(sweep.records.size(), 3u);
    EXPECT_EQ(sweep.records[0].j_prime, 0.0);
    EXPECT_EQ(sweep.records[1].j_prime, 0.04);
    EXPECT_EQ(sweep.records[2].j_prime, 0.1);
    for (const auto &rec : sweep.records) {
        const auto alone = sweep_point(ChainParams{}, rec.j_prime, initial_superposition(), kFast);
        EXPECT_EQ(alone.fidelity.value, rec.fidelity.value);
        EXPECT_EQ(alone.final_probabilities, rec.final_probabilities);
    }
}

TEST(sweep_jprime, rejects_bad_lists) {
    EXPECT_THROW(sweep_jprime(ChainParams{}, std::span<const double>{}, initial_superposition(), kFast),
                 std::invalid_argument);
    const double negative[] = {0.1, -0.02};
    EXPECT_THROW(sweep_jprime(ChainParams{}, negative, initial_superposition(), kFast), std::invalid_argument);
}

TEST(sweep_jprime, digital_population_stays_in_target_pair) {
    const auto sweep = sweep_jprime(ChainParams{}, kDefaultJPrimes, initial_digital(1, 1, 0), kFast);
    ASSERT_EQ(sweep.records.size(), kDefaultJPrimes.size());
    for (const auto &rec : sweep.records) {
        EXPECT_GE(rec.p(6) + rec.p(7), 0.999) << rec.j_prime;
        EXPECT_LE(rec.max_norm_drift, kNormTolerance);
    }
}
