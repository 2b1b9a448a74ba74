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

#include <fstream>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccnsim/config.hpp"
#include "ccnsim/csv.hpp"
#include "ccnsim/scenarios.hpp"

namespace ccnsim {

inline constexpr const char *kVersion = "1.0.0";

class IoError : public std::runtime_error {
   public:
    explicit IoError(const std::string &path)
        : std::runtime_error("cannot write '" + path + "'"), path_(path) {}
    const std::string &path() const { return path_; }

   private:
    std::string path_;
};

/// A numerical invariant (norm drift) failed after the run completed.
class InvariantError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string provenance(const char *command, const RunConfig &cfg, const std::string &extra = {}) {
    std::ostringstream out;
    csv::write_comment_block(out, std::string("ccnsim ") + kVersion + " " + command);
    csv::write_comment_block(out, render_config(cfg));
    if (!extra.empty()) {
        csv::write_comment_block(out, extra);
    }
    return out.str();
}

inline void write_file(const std::string &path, const std::string &header,
                       const std::function<void(std::ostream &)> &body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError(path);
    }
    f << header;
    body(f);
    f.close();
    if (!f) {
        throw IoError(path);
    }
}

}  // namespace detail

inline std::string spectrum_path(const RunConfig &cfg) { return cfg.out_prefix + "_spectrum.csv"; }
inline std::string timeseries_path(const RunConfig &cfg) { return cfg.out_prefix + "_timeseries.csv"; }
inline std::string summary_path(const RunConfig &cfg) { return cfg.out_prefix + "_summary.csv"; }
inline std::string sweep_path(const RunConfig &cfg) { return cfg.out_prefix + "_sweep.csv"; }

/// Writes <prefix>_spectrum.csv.
inline SpectrumReport cmd_spectrum(const RunConfig &cfg) {
    const SpectrumReport r = spectrum_report(cfg.params);
    detail::write_file(spectrum_path(cfg), detail::provenance("spectrum", cfg),
                       [&](std::ostream &out) { csv::write_spectrum(out, r); });
    return r;
}

/// The pulse a `run` uses: the CCN pi pulse unless overridden.
inline PulseSpec run_pulse(const RunConfig &cfg) {
    PulseSpec pulse = ccn_pulse(cfg.params);
    if (cfg.pulse_frequency) {
        pulse.frequency = *cfg.pulse_frequency;
    }
    if (cfg.duration) {
        pulse.duration = *cfg.duration;
    }
    return pulse;
}

/// Writes <prefix>_timeseries.csv and <prefix>_summary.csv. Throws
/// InvariantError after writing if the norm drifted past 1e-6.
inline ExperimentResult cmd_run(const RunConfig &cfg) {
    ExperimentResult r = run_experiment(cfg.params, run_pulse(cfg), initial_state(cfg), cfg.integrator());
    const std::string header = detail::provenance("run", cfg);
    detail::write_file(timeseries_path(cfg), header, [&](std::ostream &out) { csv::write_timeseries(out, r); });
    detail::write_file(summary_path(cfg), header, [&](std::ostream &out) { csv::write_summary(out, r); });
    if (!r.norm_ok()) {
        throw InvariantError("norm drift " + format_number(r.max_norm_drift) + " exceeds 1e-6");
    }
    return r;
}

/// Writes <prefix>_sweep.csv. The config's own j_prime, pulse_frequency and
/// duration are not used; every point runs at its own CCN resonance.
inline SweepResult cmd_sweep(const RunConfig &cfg, std::span<const double> j_primes) {
    SweepResult r = sweep_jprime(cfg.params, j_primes, initial_state(cfg), cfg.integrator());
    std::string list;
    for (double v : j_primes) {
        list += (list.empty() ? "" : ",") + format_number(v);
    }
    detail::write_file(sweep_path(cfg), detail::provenance("sweep", cfg, "jprimes = " + list),
                       [&](std::ostream &out) { csv::write_sweep(out, r); });
    for (const auto &rec : r.records) {
        if (rec.max_norm_drift > kNormTolerance) {
            throw InvariantError("norm drift " + format_number(rec.max_norm_drift) + " exceeds 1e-6 at j_prime " +
                                 format_number(rec.j_prime));
        }
    }
    return r;
}

}  // namespace ccnsim
