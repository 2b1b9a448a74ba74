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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccnsim/rk4.hpp"
#include "ccnsim/spin_model.hpp"

namespace ccnsim {

/// One rf pulse. frequency in MHz (angular 2*pi*f), phase in radians,
/// duration in us.
struct PulseSpec {
    double frequency = 0.0;
    double phase = 0.0;
    double duration = 0.0;

    bool operator==(const PulseSpec &) const = default;
};

/// Interaction-picture amplitudes D_m at time t.
struct RotatingState {
    Amplitudes d{};
    double t = 0.0;

    const Amplitudes &amplitudes() const { return d; }
    bool operator==(const RotatingState &) const = default;
};

/// Lab-frame amplitudes C_m at time t.
struct LabState {
    Amplitudes c{};
    double t = 0.0;

    const Amplitudes &amplitudes() const { return c; }
    bool operator==(const LabState &) const = default;
};

template <typename S>
concept FrameState = requires(const S &s) {
    { s.amplitudes() } -> std::convertible_to<const Amplitudes &>;
    { s.t } -> std::convertible_to<double>;
};

enum class Method { kRungeKutta4 };

struct IntegratorConfig {
    double dt = 1e-6;
    std::size_t sample_stride = 1000;
    Method method = Method::kRungeKutta4;

    bool operator==(const IntegratorConfig &) const = default;
};

/// Samples are strictly increasing in t, from 0 to the pulse duration.
struct Trajectory {
    std::vector<RotatingState> samples;
    ChainParams params;
    PulseSpec pulse;
    /// max |sum |D|^2 - 1| over every integration step, not only samples.
    double max_norm_drift = 0.0;
    std::uint64_t steps = 0;

    const RotatingState &final_state() const { return samples.back(); }
};

/// Norm drift past the abort threshold; the step is too coarse.
class NormDriftError : public std::runtime_error {
   public:
    NormDriftError(double t, double drift)
        : std::runtime_error("norm drift " + std::to_string(drift) + " at t=" + std::to_string(t) +
                             " us exceeds 1e-5; reduce dt"),
          t_(t),
          drift_(drift) {}

    double time() const { return t_; }
    double drift() const { return drift_; }

   private:
    double t_;
    double drift_;
};

inline constexpr double kNormAbortThreshold = 1e-5;
inline constexpr double kInitialNormTolerance = 1e-9;

inline double squared_norm(const Amplitudes &a) {
    double s = 0.0;
    for (const auto &x : a) {
        s += std::norm(x);
    }
    return s;
}

/// Length of a pi pulse, pi / Omega with Omega = 2*pi*rabi.
inline double pi_pulse_duration(const ChainParams &p) {
    if (!(p.rabi > 0)) {
        throw std::invalid_argument("pi_pulse_duration: rabi must be > 0");
    }
    return 1.0 / (2.0 * p.rabi);
}

namespace detail {

// Interaction-picture generator dD/dt = -i sum_k W_mk D_k e^{i w_mk t}.
// The per-state phases e^{iE_m t} are cached for the last t seen, since RK4
// evaluates twice at the midpoint.
class RotatingGenerator {
   public:
    RotatingGenerator(const ChainParams &p, const PulseSpec &pulse)
        : freq_(kTwoPi * pulse.frequency), phase_(pulse.phase), half_rabi_(0.5 * kTwoPi * p.rabi) {
        for (int m = 0; m < kDim; ++m) {
            energy_[m] = kTwoPi * energy(BasisIndex(m), p);
        }
    }

    Amplitudes operator()(double t, const Amplitudes &d) {
        refresh(t);
        Amplitudes v;
        for (int k = 0; k < kDim; ++k) {
            v[k] = std::conj(u_[k]) * d[k];
        }
        Amplitudes out;
        for (int m = 0; m < kDim; ++m) {
            Complex acc{0.0, 0.0};
            for (int q = 0; q < kNumQubits; ++q) {
                const int k = m ^ (1 << q);
                acc += (m > k ? std::conj(z_) : z_) * v[k];
            }
            // -i * (-Omega/2) * u_m * acc
            out[m] = Complex(0.0, half_rabi_) * u_[m] * acc;
        }
        return out;
    }

   private:
    void refresh(double t) {
        if (cached_ && t == t_) {
            return;
        }
        for (int m = 0; m < kDim; ++m) {
            u_[m] = std::polar(1.0, energy_[m] * t);
        }
        z_ = std::polar(1.0, freq_ * t + phase_);
        t_ = t;
        cached_ = true;
    }

    std::array<double, kDim> energy_{};
    double freq_;
    double phase_;
    double half_rabi_;
    bool cached_ = false;
    double t_ = 0.0;
    Amplitudes u_{};
    Complex z_{};
};

// Lab-frame generator dC/dt = -i (E_m C_m + sum_k W_mk C_k).
class LabGenerator {
   public:
    LabGenerator(const ChainParams &p, const PulseSpec &pulse)
        : freq_(kTwoPi * pulse.frequency), phase_(pulse.phase), half_rabi_(0.5 * kTwoPi * p.rabi) {
        for (int m = 0; m < kDim; ++m) {
            energy_[m] = kTwoPi * energy(BasisIndex(m), p);
        }
    }

    Amplitudes operator()(double t, const Amplitudes &c) const {
        const Complex z = std::polar(1.0, freq_ * t + phase_);
        Amplitudes out;
        for (int m = 0; m < kDim; ++m) {
            Complex acc{0.0, 0.0};
            for (int q = 0; q < kNumQubits; ++q) {
                const int k = m ^ (1 << q);
                acc += (m > k ? std::conj(z) : z) * c[k];
            }
            out[m] = Complex(0.0, -1.0) * (energy_[m] * c[m] - half_rabi_ * acc);
        }
        return out;
    }

   private:
    std::array<double, kDim> energy_{};
    double freq_;
    double phase_;
    double half_rabi_;
};

// Fixed-step grid over [0, duration]; the last step lands exactly on duration.
struct StepGrid {
    std::uint64_t count;
    double dt;
    double duration;

    StepGrid(double dt_, double duration_) : dt(dt_), duration(duration_) {
        if (!(dt > 0)) {
            throw std::invalid_argument("integrator dt must be > 0");
        }
        if (!(duration > 0)) {
            throw std::invalid_argument("pulse duration must be > 0");
        }
        const double ratio = duration / dt;
        const double nearest = std::round(ratio);
        count = static_cast<std::uint64_t>(std::abs(ratio - nearest) <= 1e-9 * ratio ? nearest : std::ceil(ratio));
        if (count == 0) {
            count = 1;
        }
    }

    double time(std::uint64_t i) const { return i >= count ? duration : static_cast<double>(i) * dt; }
};

inline void check_normalized(const Amplitudes &a, double tol, const char *what) {
    const double drift = std::abs(squared_norm(a) - 1.0);
    if (drift > tol) {
        throw std::invalid_argument(std::string(what) + ": initial state is not normalized (|norm^2 - 1| = " +
                                    std::to_string(drift) + ")");
    }
}

}  // namespace detail

/// dD/dt for the interaction-picture equations (rad/us units).
inline Amplitudes rotating_rhs(double t, const Amplitudes &d, const ChainParams &p, const PulseSpec &pulse) {
    detail::RotatingGenerator gen(p, pulse);
    return gen(t, d);
}

/// dC/dt for the untransformed lab-frame equations.
inline Amplitudes lab_rhs(double t, const Amplitudes &c, const ChainParams &p, const PulseSpec &pulse) {
    return detail::LabGenerator(p, pulse)(t, c);
}

/// Integrates the interaction-picture equations over one pulse with fixed-step
/// RK4. Records t=0, every cfg.sample_stride steps, and the final state.
/// Never renormalizes; throws NormDriftError if a recorded sample drifts by
/// more than 1e-5.
inline Trajectory evolve(const RotatingState &initial, const PulseSpec &pulse, const ChainParams &p,
                         const IntegratorConfig &cfg) {
    detail::check_normalized(initial.d, kInitialNormTolerance, "evolve");
    if (initial.t != 0.0) {
        throw std::invalid_argument("evolve: initial state must be at t = 0");
    }
    if (cfg.sample_stride == 0) {
        throw std::invalid_argument("evolve: sample_stride must be >= 1");
    }
    const detail::StepGrid grid(cfg.dt, pulse.duration);
    detail::RotatingGenerator gen(p, pulse);

    Trajectory traj;
    traj.params = p;
    traj.pulse = pulse;
    traj.steps = grid.count;
    traj.samples.reserve(grid.count / cfg.sample_stride + 2);
    traj.samples.push_back(initial);

    Amplitudes d = initial.d;
    for (std::uint64_t i = 0; i < grid.count; ++i) {
        const double t0 = grid.time(i);
        const double t1 = grid.time(i + 1);
        d = rk4_step(gen, t0, d, t1 - t0);
        const double drift = std::abs(squared_norm(d) - 1.0);
        if (drift > traj.max_norm_drift) {
            traj.max_norm_drift = drift;
        }
        const bool last = i + 1 == grid.count;
        if (last || (i + 1) % cfg.sample_stride == 0) {
            if (drift > kNormAbortThreshold) {
                throw NormDriftError(t1, drift);
            }
            traj.samples.push_back({d, t1});
        }
    }
    return traj;
}

/// C_m = D_m e^{-i E_m t}.
inline LabState to_lab(const RotatingState &s, const ChainParams &p) {
    LabState out{.c = {}, .t = s.t};
    for (int m = 0; m < kDim; ++m) {
        out.c[m] = s.d[m] * std::polar(1.0, -kTwoPi * energy(BasisIndex(m), p) * s.t);
    }
    return out;
}

/// Inverse of to_lab.
inline RotatingState to_rotating(const LabState &s, const ChainParams &p) {
    RotatingState out{.d = {}, .t = s.t};
    for (int m = 0; m < kDim; ++m) {
        out.d[m] = s.c[m] * std::polar(1.0, kTwoPi * energy(BasisIndex(m), p) * s.t);
    }
    return out;
}

/// Integrates the lab-frame equations (fast diagonal term kept) on the same
/// step grid as evolve. Only used to cross-check evolve through to_lab.
inline LabState evolve_lab_oracle(const LabState &initial, const PulseSpec &pulse, const ChainParams &p,
                                  const IntegratorConfig &cfg) {
    detail::check_normalized(initial.c, kInitialNormTolerance, "evolve_lab_oracle");
    if (initial.t != 0.0) {
        throw std::invalid_argument("evolve_lab_oracle: initial state must be at t = 0");
    }
    if (cfg.sample_stride == 0) {
        throw std::invalid_argument("evolve_lab_oracle: sample_stride must be >= 1");
    }
    const detail::StepGrid grid(cfg.dt, pulse.duration);
    const detail::LabGenerator gen(p, pulse);

    Amplitudes c = initial.c;
    for (std::uint64_t i = 0; i < grid.count; ++i) {
        const double t0 = grid.time(i);
        const double t1 = grid.time(i + 1);
        c = rk4_step(gen, t0, c, t1 - t0);
        const bool last = i + 1 == grid.count;
        if (last || (i + 1) % cfg.sample_stride == 0) {
            const double drift = std::abs(squared_norm(c) - 1.0);
            if (drift > kNormAbortThreshold) {
                throw NormDriftError(t1, drift);
            }
        }
    }
    return {c, grid.duration};
}

}  // namespace ccnsim
