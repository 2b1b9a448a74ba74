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
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccnsim {

/// Number of qubits in the chain and dimension of the register.
inline constexpr int kNumQubits = 3;
inline constexpr int kDim = 1 << kNumQubits;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, kDim>;

/// Physical parameters of the chain. Every frequency is a linear frequency in
/// MHz; a stored value f stands for the angular frequency 2*pi*f rad/us.
struct ChainParams {
    std::array<double, kNumQubits> omega{100.0, 200.0, 400.0};
    double j = 5.0;
    double j_prime = 0.0;
    double rabi = 0.1;

    bool operator==(const ChainParams &) const = default;

    /// Throws std::invalid_argument naming the first violated invariant.
    void validate() const {
        for (int k = 0; k < kNumQubits; ++k) {
            if (!(omega[k] > 0)) {
                throw std::invalid_argument("omega" + std::to_string(k) + " must be > 0");
            }
        }
        if (omega[0] == omega[1] || omega[1] == omega[2] || omega[0] == omega[2]) {
            throw std::invalid_argument("omega0, omega1, omega2 must be pairwise distinct");
        }
        if (!(j > 0)) {
            throw std::invalid_argument("j must be > 0");
        }
        if (!(j_prime >= 0)) {
            throw std::invalid_argument("j_prime must be >= 0");
        }
        if (!(rabi > 0)) {
            throw std::invalid_argument("rabi must be > 0");
        }
    }
};

/// Decimal label of a register state |i2 i1 i0>, i0 being the least
/// significant bit.
class BasisIndex {
   public:
    constexpr BasisIndex() = default;
    constexpr explicit BasisIndex(int value) : value_(value) {
        if (value < 0 || value >= kDim) {
            throw std::out_of_range("basis index must be in 0..7");
        }
    }

    /// Builds |i2 i1 i0> from its bits.
    static constexpr BasisIndex from_bits(int i2, int i1, int i0) {
        if ((i2 | i1 | i0) & ~1) {
            throw std::invalid_argument("bits must be 0 or 1");
        }
        return BasisIndex((i2 << 2) | (i1 << 1) | i0);
    }

    constexpr int value() const { return value_; }
    constexpr int bit(int j) const { return (value_ >> j) & 1; }
    constexpr BasisIndex flipped(int j) const { return BasisIndex(value_ ^ (1 << j)); }

    /// "i2i1i0", e.g. "110" for 6.
    std::string bits() const {
        return {char('0' + bit(2)), char('0' + bit(1)), char('0' + bit(0))};
    }

    constexpr bool operator==(const BasisIndex &) const = default;
    constexpr auto operator<=>(const BasisIndex &) const = default;

   private:
    int value_ = 0;
};

constexpr int hamming_distance(BasisIndex a, BasisIndex b) {
    int x = a.value() ^ b.value();
    int n = 0;
    while (x != 0) {
        n += x & 1;
        x >>= 1;
    }
    return n;
}

namespace detail {
constexpr double sign_of_bit(int b) { return b == 0 ? 1.0 : -1.0; }
}  // namespace detail

/// Eigenvalue E_k / hbar of the static Ising Hamiltonian (MHz).
constexpr double energy(BasisIndex k, const ChainParams &p) {
    using detail::sign_of_bit;
    const int i0 = k.bit(0), i1 = k.bit(1), i2 = k.bit(2);
    return -0.5 * (sign_of_bit(i2) * p.omega[2] + sign_of_bit(i1) * p.omega[1] + sign_of_bit(i0) * p.omega[0] +
                   p.j * (sign_of_bit(i0 ^ i1) + sign_of_bit(i1 ^ i2)) + p.j_prime * sign_of_bit(i0 ^ i2));
}

/// (E_m - E_k) / hbar, summed term by term so that terms whose sign does not
/// change contribute exactly zero. This keeps degenerate transitions (J' = 0)
/// bit-identical and matches ccn_resonance exactly.
constexpr double transition_frequency(BasisIndex m, BasisIndex k, const ChainParams &p) {
    using detail::sign_of_bit;
    const auto term = [](double sm, double sk, double coef) { return sm == sk ? 0.0 : (sm > sk ? -coef : coef); };
    const int m0 = m.bit(0), m1 = m.bit(1), m2 = m.bit(2);
    const int k0 = k.bit(0), k1 = k.bit(1), k2 = k.bit(2);
    double w = 0.0;
    w += term(sign_of_bit(m2), sign_of_bit(k2), p.omega[2]);
    w += term(sign_of_bit(m1), sign_of_bit(k1), p.omega[1]);
    w += term(sign_of_bit(m0), sign_of_bit(k0), p.omega[0]);
    w += term(sign_of_bit(m0 ^ m1), sign_of_bit(k0 ^ k1), p.j);
    w += term(sign_of_bit(m1 ^ m2), sign_of_bit(k1 ^ k2), p.j);
    w += term(sign_of_bit(m0 ^ m2), sign_of_bit(k0 ^ k2), p.j_prime);
    return w;
}

/// Drive frequency that resonantly couples |110> and |111>.
constexpr double ccn_resonance(const ChainParams &p) { return p.omega[0] - p.j - p.j_prime; }

/// Offset of the |upper> <-> |lower> transition from the drive frequency.
constexpr double detuning(BasisIndex upper, BasisIndex lower, double pulse_freq, const ChainParams &p) {
    return transition_frequency(upper, lower, p) - pulse_freq;
}

/// Matrix element <m|W|k> / hbar of the rf drive at time t (us), in angular
/// units (rad/us). Only single-bit flips couple. Raising a bit (m > k) picks
/// up e^{-i(wt+phase)}, lowering picks up e^{+i(wt+phase)}, so that the
/// upward transition is resonant when the drive matches E_m - E_k.
inline Complex coupling_element(BasisIndex m, BasisIndex k, double t, double pulse_freq, const ChainParams &p,
                                double phase = 0.0) {
    if (hamming_distance(m, k) != 1) {
        return {0.0, 0.0};
    }
    const double arg = kTwoPi * pulse_freq * t + phase;
    const double half_rabi = 0.5 * kTwoPi * p.rabi;
    return m.value() > k.value() ? -half_rabi * std::polar(1.0, -arg) : -half_rabi * std::polar(1.0, arg);
}

struct EnergyLevel {
    BasisIndex state;
    double energy;
};

/// Single spin-flip transition; `upper` has the flipped bit set.
struct Transition {
    BasisIndex upper;
    BasisIndex lower;
    int qubit;
    double frequency;
};

struct SpectrumReport {
    std::vector<EnergyLevel> levels;
    std::vector<Transition> transitions;
};

/// All 8 levels sorted by energy, and all 12 single-flip transitions sorted by
/// flipped qubit then frequency.
inline SpectrumReport spectrum_report(const ChainParams &p) {
    SpectrumReport r;
    for (int k = 0; k < kDim; ++k) {
        r.levels.push_back({BasisIndex(k), energy(BasisIndex(k), p)});
    }
    std::stable_sort(r.levels.begin(), r.levels.end(),
                     [](const EnergyLevel &a, const EnergyLevel &b) { return a.energy < b.energy; });
    for (int q = 0; q < kNumQubits; ++q) {
        for (int k = 0; k < kDim; ++k) {
            BasisIndex lower(k);
            if (lower.bit(q) != 0) {
                continue;
            }
            BasisIndex upper = lower.flipped(q);
            r.transitions.push_back({upper, lower, q, transition_frequency(upper, lower, p)});
        }
    }
    std::stable_sort(r.transitions.begin(), r.transitions.end(), [](const Transition &a, const Transition &b) {
        return a.qubit != b.qubit ? a.qubit < b.qubit : a.frequency < b.frequency;
    });
    return r;
}

}  // namespace ccnsim
