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

#include "ccnsim/observables.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ccnsim/scenarios.hpp"
#include "oracle/dense_operators.hpp"

using namespace ccnsim;

namespace {

template <typename A, typename B>
concept FidelityComparable = requires(const A &a, const B &b) { fidelity(a, b); };

static_assert(FidelityComparable<RotatingState, RotatingState>);
static_assert(FidelityComparable<LabState, LabState>);
static_assert(!FidelityComparable<RotatingState, LabState>);
static_assert(!FidelityComparable<LabState, RotatingState>);

LabState random_lab_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    LabState s;
    for (auto &a : s.c) a = {g(rng), g(rng)};
    const double n = std::sqrt(squared_norm(s.c));
    for (auto &a : s.c) a /= n;
    return s;
}

// Frozen from exact rational squares of the superposition amplitudes.
constexpr std::array<double, 8> kSuperpositionProbabilities = {
    4.0 / 72, 14.0 / 72, 1.0 / 72, 17.0 / 72, 9.0 / 128, 23.0 / 128, 1.0 / 32, 7.0 / 32};

}  // namespace

TEST(probabilities, examples) {
    const auto p = probabilities(initial_digital(1, 1, 0));
    for (int k = 0; k < kDim; ++k) EXPECT_EQ(p[k], k == 6 ? 1.0 : 0.0);

    const auto sup = initial_superposition();
    const auto ps = probabilities(sup);
    double sum = 0.0;
    for (int k = 0; k < kDim; ++k) {
        EXPECT_NEAR(ps[k], kSuperpositionProbabilities[k], 1e-15);
        sum += ps[k];
    }
    EXPECT_NEAR(sum, 1.0, 1e-15);

    RotatingState later = sup;
    later.t = 2.5;
    const auto pl = probabilities(to_lab(later, ChainParams{.j_prime = 0.1}));
    for (int k = 0; k < kDim; ++k) EXPECT_NEAR(pl[k], ps[k], 1e-15);
}

TEST(longitudinal_expectations, examples) {
    const auto iz = longitudinal_expectations(initial_digital(1, 1, 0));
    EXPECT_EQ(iz[0], 0.5);
    EXPECT_EQ(iz[1], -0.5);
    EXPECT_EQ(iz[2], -0.5);

    // (1/2)[(4-14+1-17)/72 + (9-23)/128 + (1-7)/32]
    const double expected_iz0 = 0.5 * (-26.0 / 72 - 14.0 / 128 - 6.0 / 32);
    const auto sup = longitudinal_expectations(initial_superposition());
    EXPECT_NEAR(sup[0], expected_iz0, 1e-15);
    EXPECT_NEAR(sup[0], -0.328993, 1e-6);

    const auto after = longitudinal_expectations(apply_ideal_ccn(initial_digital(1, 1, 0)));
    EXPECT_EQ(after[0], -0.5);
    EXPECT_EQ(after[1], iz[1]);
    EXPECT_EQ(after[2], iz[2]);
}

TEST(longitudinal_expectations, basis_states_and_dense_oracle) {
    for (int k = 0; k < kDim; ++k) {
        RotatingState s;
        s.d[k] = 1.0;
        const auto iz = longitudinal_expectations(s);
        for (int q = 0; q < kNumQubits; ++q) EXPECT_EQ(iz[q], ((k >> q) & 1) ? -0.5 : 0.5);
    }
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_lab_state(rng);
        const auto iz = longitudinal_expectations(s);
        for (int q = 0; q < kNumQubits; ++q) {
            const auto e = oracle::expectation(oracle::on_qubit(oracle::iz2(), q), s.c);
            EXPECT_NEAR(iz[q], e.real(), 1e-12);
            EXPECT_LE(std::abs(iz[q]), 0.5 + 1e-12);
        }
    }
}

TEST(transverse_expectations, examples) {
    LabState definite;
    definite.c[6] = 1.0;
    const auto [ix, iy] = transverse_expectations(definite);
    for (int q = 0; q < kNumQubits; ++q) {
        EXPECT_EQ(ix[q], 0.0);
        EXPECT_EQ(iy[q], 0.0);
    }

    LabState plus;
    plus.c[0] = plus.c[1] = 1.0 / std::sqrt(2.0);
    const auto [px, py] = transverse_expectations(plus);
    EXPECT_NEAR(px[0], 0.5, 1e-15);
    EXPECT_EQ(py[0], 0.0);
    for (int q = 1; q < kNumQubits; ++q) {
        EXPECT_EQ(px[q], 0.0);
        EXPECT_EQ(py[q], 0.0);
    }
}

// Pair sums equal <I^x> = <(P + P^dag)/2> and <I^y> = <(P - P^dag)/(2i)>
// with P the bit-raising ladder |1><0| on the qubit.
TEST(transverse_expectations, matches_dense_operator_oracle) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_lab_state(rng);
        const auto [ix, iy] = transverse_expectations(s);
        for (int q = 0; q < kNumQubits; ++q) {
            const auto raise = oracle::on_qubit(oracle::bit_raise2(), q);
            const auto lower = oracle::dagger(raise);
            const auto opx = oracle::scale(oracle::add(raise, lower), 0.5);
            const auto opy = oracle::scale(oracle::add(raise, lower, -1.0), Complex(0, -0.5));
            EXPECT_NEAR(ix[q], oracle::expectation(opx, s.c).real(), 1e-12);
            EXPECT_NEAR(iy[q], oracle::expectation(opy, s.c).real(), 1e-12);
            EXPECT_LE(ix[q] * ix[q] + iy[q] * iy[q], 0.25 + 1e-12);
        }
    }
}

TEST(fidelity, examples) {
    const auto sup = initial_superposition();
    const auto self = fidelity(sup, sup);
    EXPECT_NEAR(self.value.real(), 1.0, 1e-15);
    EXPECT_EQ(self.value.imag(), 0.0);

    RotatingState i111;
    i111.d[7] = Complex(0, 1);
    EXPECT_EQ(fidelity(initial_digital(1, 1, 0), i111).value, Complex(0.0));
    EXPECT_EQ(fidelity(apply_ideal_ccn(initial_digital(1, 1, 0)), i111).value, Complex(1.0));

    RotatingState bad;
    bad.d[0] = 2.0;
    EXPECT_THROW(fidelity(bad, sup), std::invalid_argument);
    EXPECT_THROW(fidelity(sup, bad), std::invalid_argument);
}

TEST(fidelity, bounded_by_one) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_lab_state(rng), b = random_lab_state(rng);
        EXPECT_LE(fidelity(a, b).modulus(), 1.0 + 1e-12);
    }
}

TEST(apply_ideal_ccn, examples) {
    const auto out = apply_ideal_ccn(initial_digital(1, 1, 0));
    for (int k = 0; k < kDim; ++k) EXPECT_EQ(out.d[k], k == 7 ? Complex(0, 1) : Complex(0.0));
    EXPECT_EQ(apply_ideal_ccn(initial_digital(0, 0, 0)).d, initial_digital(0, 0, 0).d);
    const auto twice = apply_ideal_ccn(apply_ideal_ccn(initial_digital(1, 1, 0)));
    for (int k = 0; k < kDim; ++k) EXPECT_EQ(twice.d[k], k == 6 ? Complex(-1.0) : Complex(0.0));
}

TEST(apply_ideal_ccn, unitary_and_identity_on_first_six) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_lab_state(rng), b = random_lab_state(rng);
        const auto ua = apply_ideal_ccn(a), ub = apply_ideal_ccn(b);
        EXPECT_NEAR(std::abs(fidelity(ua, ub).value - fidelity(a, b).value), 0.0, 1e-12);
        for (int k = 0; k < 6; ++k) EXPECT_EQ(ua.c[k], a.c[k]);
    }
}

TEST(apply_ideal_ccn, agrees_with_truth_table_up_to_phase) {
    for (int k = 0; k < kDim; ++k) {
        const BasisIndex in(k);
        const auto row = classical_ccn(in.bit(2), in.bit(1), in.bit(0));
        const int target = BasisIndex::from_bits(row.a, row.b, row.c).value();
        RotatingState s;
        s.d[k] = 1.0;
        const auto out = apply_ideal_ccn(s);
        for (int m = 0; m < kDim; ++m) {
            if (m == target) {
                EXPECT_EQ(out.d[m], k >= 6 ? Complex(0, 1) : Complex(1.0));
            } else {
                EXPECT_EQ(out.d[m], Complex(0.0));
            }
        }
    }
}

TEST(classical_cn, truth_table) {
    const int rows[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 0}};
    for (const auto &r : rows) EXPECT_EQ(classical_cn(r[0], r[1]), (CnBits{r[2], r[3]}));
    EXPECT_THROW(classical_cn(2, 0), std::invalid_argument);
}

TEST(classical_ccn, truth_table) {
    const int rows[8][6] = {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 1, 1},
                            {1, 0, 0, 1, 0, 0}, {1, 0, 1, 1, 0, 1}, {1, 1, 0, 1, 1, 1}, {1, 1, 1, 1, 1, 0}};
    for (const auto &r : rows) EXPECT_EQ(classical_ccn(r[0], r[1], r[2]), (CcnBits{r[3], r[4], r[5]}));
    EXPECT_THROW(classical_ccn(0, 0, -1), std::invalid_argument);
}

TEST(classical_ccn, involution_and_control) {
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const auto once = classical_ccn(a, b, c);
                EXPECT_EQ(classical_ccn(once.a, once.b, once.c), (CcnBits{a, b, c}));
                if ((a & b) == 0) {
                    EXPECT_EQ(once.c, c);
                }
            }
}
