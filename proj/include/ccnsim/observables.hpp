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

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <tuple>

#include "ccnsim/dynamics.hpp"
#include "ccnsim/spin_model.hpp"

namespace ccnsim {

// Qubit j is bit j of the basis index (i0 least significant). Bit value 0
// carries I^z = +1/2.

struct SpinExpectations {
    std::array<double, kNumQubits> iz{};
    std::array<double, kNumQubits> ix{};
    std::array<double, kNumQubits> iy{};
};

struct GateFidelity {
    Complex value;
    double modulus() const { return std::abs(value); }
};

template <FrameState S>
std::array<double, kDim> probabilities(const S &s) {
    std::array<double, kDim> p;
    for (int k = 0; k < kDim; ++k) {
        p[k] = std::norm(s.amplitudes()[k]);
    }
    return p;
}

/// <I_j^z> = 1/2 sum_k (-1)^{bit_j(k)} |a_k|^2. Frame independent.
template <FrameState S>
std::array<double, kNumQubits> longitudinal_expectations(const S &s) {
    const auto p = probabilities(s);
    std::array<double, kNumQubits> iz{};
    for (int q = 0; q < kNumQubits; ++q) {
        double acc = 0.0;
        for (int k = 0; k < kDim; ++k) {
            acc += ((k >> q) & 1) ? -p[k] : p[k];
        }
        iz[q] = 0.5 * acc;
    }
    return iz;
}

/// Transverse components from the pair sums S_j = sum_{bit_j(k)=0}
/// conj(C_{k+2^j}) C_k: <I_j^x> = Re S_j, <I_j^y> = Im S_j. Only meaningful
/// in the lab frame, where the E_m t phases are present.
inline std::pair<std::array<double, kNumQubits>, std::array<double, kNumQubits>> transverse_expectations(
    const LabState &s) {
    std::array<double, kNumQubits> ix{}, iy{};
    for (int q = 0; q < kNumQubits; ++q) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < kDim; ++k) {
            if ((k >> q) & 1) {
                continue;
            }
            acc += std::conj(s.c[k | (1 << q)]) * s.c[k];
        }
        ix[q] = acc.real();
        iy[q] = acc.imag();
    }
    return {ix, iy};
}

inline SpinExpectations spin_expectations(const LabState &s) {
    SpinExpectations e;
    e.iz = longitudinal_expectations(s);
    std::tie(e.ix, e.iy) = transverse_expectations(s);
    return e;
}

inline constexpr double kFidelityNormTolerance = 1e-6;

/// F = <expected|actual>. Both states must live in the same frame, which the
/// signature enforces.
template <FrameState S>
GateFidelity fidelity(const S &expected, const S &actual) {
    if (std::abs(squared_norm(expected.amplitudes()) - 1.0) > kFidelityNormTolerance ||
        std::abs(squared_norm(actual.amplitudes()) - 1.0) > kFidelityNormTolerance) {
        throw std::invalid_argument("fidelity: states must be normalized within 1e-6");
    }
    Complex acc{0.0, 0.0};
    for (int k = 0; k < kDim; ++k) {
        acc += std::conj(expected.amplitudes()[k]) * actual.amplitudes()[k];
    }
    return {acc};
}

/// Ideal single-pulse Toffoli: identity on |000>..|101>, and
/// |110> -> i|111>, |111> -> i|110>.
inline Amplitudes apply_ideal_ccn(const Amplitudes &a) {
    Amplitudes out = a;
    const Complex i{0.0, 1.0};
    out[6] = i * a[7];
    out[7] = i * a[6];
    return out;
}

inline RotatingState apply_ideal_ccn(const RotatingState &s) { return {apply_ideal_ccn(s.d), s.t}; }
inline LabState apply_ideal_ccn(const LabState &s) { return {apply_ideal_ccn(s.c), s.t}; }

struct CnBits {
    int a;
    int b;
    bool operator==(const CnBits &) const = default;
};

struct CcnBits {
    int a;
    int b;
    int c;
    bool operator==(const CcnBits &) const = default;
};

namespace detail {
inline void require_bit(int x) {
    if (x != 0 && x != 1) {
        throw std::invalid_argument("bit values must be 0 or 1");
    }
}
}  // namespace detail

/// Controlled-not truth table: (a, b) -> (a, b xor a).
inline CnBits classical_cn(int a, int b) {
    detail::require_bit(a);
    detail::require_bit(b);
    return {a, b ^ a};
}

/// Toffoli truth table: (a, b, c) -> (a, b, c xor (a and b)).
inline CcnBits classical_ccn(int a, int b, int c) {
    detail::require_bit(a);
    detail::require_bit(b);
    detail::require_bit(c);
    return {a, b, c ^ (a & b)};
}

}  // namespace ccnsim
