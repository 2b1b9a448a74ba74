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

#include <ostream>
#include <string>

#include "ccnsim/scenarios.hpp"
#include "ccnsim/spin_model.hpp"
#include "ccnsim/text.hpp"

namespace ccnsim::csv {

inline const char *const kSpectrumLevelsHeader = "state_bits,energy";
inline const char *const kSpectrumTransitionsHeader = "m_bits,k_bits,qubit,frequency";
inline const char *const kSweepHeader = "j_prime,j_ratio,p2,p3,p6,p7,re_f,im_f,abs_f";
inline const char *const kSummaryHeader = "re_f,im_f,abs_f,max_norm_err";

inline std::string timeseries_header() {
    std::string h = "t";
    for (const char *prefix : {"re_d", "im_d", "p"}) {
        for (int k = 0; k < kDim; ++k) {
            h += ',' + std::string(prefix) + std::to_string(k);
        }
    }
    h += ",iz0,iz1,iz2,ix0,iy0,ix1,iy1,ix2,iy2,norm_err";
    return h;
}

/// Each line of `text` prefixed with "# ".
inline void write_comment_block(std::ostream &out, const std::string &text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            eol = text.size();
        }
        out << "# " << text.substr(pos, eol - pos) << '\n';
        pos = eol + 1;
    }
}

/// Levels block, a blank line, then the transitions block.
inline void write_spectrum(std::ostream &out, const SpectrumReport &r) {
    out << kSpectrumLevelsHeader << '\n';
    for (const auto &l : r.levels) {
        out << l.state.bits() << ',' << format_number(l.energy) << '\n';
    }
    out << '\n' << kSpectrumTransitionsHeader << '\n';
    for (const auto &t : r.transitions) {
        out << t.upper.bits() << ',' << t.lower.bits() << ',' << t.qubit << ',' << format_number(t.frequency)
            << '\n';
    }
}

inline void write_timeseries(std::ostream &out, const ExperimentResult &r) {
    out << timeseries_header() << '\n';
    for (std::size_t i = 0; i < r.trajectory.samples.size(); ++i) {
        const auto &s = r.trajectory.samples[i];
        const auto &o = r.observables[i];
        out << format_number(s.t);
        for (int k = 0; k < kDim; ++k) {
            out << ',' << format_number(s.d[k].real());
        }
        for (int k = 0; k < kDim; ++k) {
            out << ',' << format_number(s.d[k].imag());
        }
        for (int k = 0; k < kDim; ++k) {
            out << ',' << format_number(o.probabilities[k]);
        }
        for (int q = 0; q < kNumQubits; ++q) {
            out << ',' << format_number(o.spin.iz[q]);
        }
        for (int q = 0; q < kNumQubits; ++q) {
            out << ',' << format_number(o.spin.ix[q]) << ',' << format_number(o.spin.iy[q]);
        }
        out << ',' << format_number(o.norm_error) << '\n';
    }
}

inline void write_summary(std::ostream &out, const ExperimentResult &r) {
    out << kSummaryHeader << '\n'
        << format_number(r.fidelity.value.real()) << ',' << format_number(r.fidelity.value.imag()) << ','
        << format_number(r.fidelity.modulus()) << ',' << format_number(r.max_norm_drift) << '\n';
}

inline void write_sweep(std::ostream &out, const SweepResult &r) {
    out << kSweepHeader << '\n';
    for (const auto &rec : r.records) {
        out << format_number(rec.j_prime) << ',' << format_number(rec.j_ratio) << ','
            << format_number(rec.p(2)) << ',' << format_number(rec.p(3)) << ',' << format_number(rec.p(6)) << ','
            << format_number(rec.p(7)) << ',' << format_number(rec.fidelity.value.real()) << ','
            << format_number(rec.fidelity.value.imag()) << ',' << format_number(rec.fidelity.modulus()) << '\n';
    }
}

}  // namespace ccnsim::csv
