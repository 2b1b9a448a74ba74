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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccnsim/dynamics.hpp"
#include "ccnsim/spin_model.hpp"
#include "ccnsim/scenarios.hpp"
#include "ccnsim/text.hpp"

namespace ccnsim {

struct Superposition {
    bool operator==(const Superposition &) const = default;
};

/// Digital basis state, the built-in superposition, or explicit amplitudes.
using InitialSpec = std::variant<BasisIndex, Superposition, Amplitudes>;

struct RunConfig {
    ChainParams params;
    InitialSpec initial = BasisIndex(6);
    std::optional<double> pulse_frequency;
    std::optional<double> duration;
    double dt = 1e-6;
    std::uint64_t stride = 1000;
    std::string out_prefix = "ccn";

    bool operator==(const RunConfig &) const = default;

    IntegratorConfig integrator() const { return {.dt = dt, .sample_stride = stride}; }
};

/// `reason` is a stable machine-readable tag (unknown_key, malformed_number,
/// invariant, normalization, missing_key, duplicate_key, syntax).
class ConfigError : public std::runtime_error {
   public:
    ConfigError(int line, std::string reason, const std::string &message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line),
          reason_(std::move(reason)) {}

    int line() const { return line_; }
    const std::string &reason() const { return reason_; }

   private:
    int line_;
    std::string reason_;
};

inline constexpr double kExplicitNormTolerance = 1e-6;

namespace detail {

inline std::optional<Amplitudes> parse_amplitudes(std::string_view text) {
    Amplitudes out{};
    std::size_t n = 0;
    text = trim(text);
    while (!text.empty()) {
        if (n == kDim || text.front() != '(') {
            return std::nullopt;
        }
        const auto close = text.find(')');
        const auto comma = text.find(',');
        if (close == std::string_view::npos || comma == std::string_view::npos || comma > close) {
            return std::nullopt;
        }
        auto re = parse_number(text.substr(1, comma - 1));
        auto im = parse_number(text.substr(comma + 1, close - comma - 1));
        if (!re || !im) {
            return std::nullopt;
        }
        out[n++] = {*re, *im};
        text = trim(text.substr(close + 1));
    }
    if (n != kDim) {
        return std::nullopt;
    }
    return out;
}

inline std::string render_initial(const InitialSpec &init) {
    if (const auto *b = std::get_if<BasisIndex>(&init)) {
        return b->bits();
    }
    if (std::holds_alternative<Superposition>(init)) {
        return "superposition";
    }
    std::string s;
    for (const auto &a : std::get<Amplitudes>(init)) {
        if (!s.empty()) {
            s += ' ';
        }
        s += format_complex(a);
    }
    return s;
}

}  // namespace detail

/// Parses `key = value` lines; `#` starts a comment. Missing keys take the
/// default chain (omega = 100/200/400, J = 5, rabi = 0.1, initial |110>),
/// except j_prime, which is required.
inline RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::map<std::string, int, std::less<>> seen;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(line_no, "syntax", "expected `key = value`");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (seen.contains(key)) {
            throw ConfigError(line_no, "duplicate_key", "duplicate key '" + key + "'");
        }

        const auto number = [&]() {
            auto v = parse_number(value);
            if (!v) {
                throw ConfigError(line_no, "malformed_number",
                                  "malformed number '" + std::string(value) + "' for '" + key + "'");
            }
            return *v;
        };
        const auto positive = [&](double v) {
            if (!(v > 0)) {
                throw ConfigError(line_no, "invariant", key + " must be > 0");
            }
            return v;
        };

        if (key == "omega0" || key == "omega1" || key == "omega2") {
            cfg.params.omega[key.back() - '0'] = positive(number());
        } else if (key == "j") {
            cfg.params.j = positive(number());
        } else if (key == "j_prime") {
            cfg.params.j_prime = number();
            if (!(cfg.params.j_prime >= 0)) {
                throw ConfigError(line_no, "invariant", "j_prime must be >= 0");
            }
        } else if (key == "rabi") {
            cfg.params.rabi = positive(number());
        } else if (key == "initial") {
            if (value == "superposition") {
                cfg.initial = Superposition{};
            } else if (value.size() == 3 && value.find_first_not_of("01") == std::string_view::npos) {
                cfg.initial = BasisIndex::from_bits(value[0] - '0', value[1] - '0', value[2] - '0');
            } else if (auto amps = detail::parse_amplitudes(value)) {
                const double n2 = squared_norm(*amps);
                if (std::abs(n2 - 1.0) > kExplicitNormTolerance) {
                    throw ConfigError(line_no, "normalization",
                                      "initial amplitudes have squared norm " + format_number(n2) +
                                          ", expected 1 within 1e-6");
                }
                cfg.initial = *amps;
            } else {
                throw ConfigError(line_no, "syntax",
                                  "initial must be a bitstring like 110, 'superposition', or 8 (re,im) pairs");
            }
        } else if (key == "pulse_frequency") {
            cfg.pulse_frequency = positive(number());
        } else if (key == "duration") {
            cfg.duration = positive(number());
        } else if (key == "dt") {
            cfg.dt = positive(number());
        } else if (key == "stride") {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
                throw ConfigError(line_no, "malformed_number", "stride must be a positive integer");
            }
            if (v == 0) {
                throw ConfigError(line_no, "invariant", "stride must be >= 1");
            }
            cfg.stride = v;
        } else if (key == "out_prefix") {
            if (value.empty()) {
                throw ConfigError(line_no, "invariant", "out_prefix must not be empty");
            }
            cfg.out_prefix = std::string(value);
        } else {
            throw ConfigError(line_no, "unknown_key", "unknown key '" + key + "'");
        }
        seen.emplace(key, line_no);
    }

    if (!seen.contains("j_prime")) {
        throw ConfigError(0, "missing_key", "j_prime is required");
    }
    try {
        cfg.params.validate();
    } catch (const std::invalid_argument &e) {
        int at = 0;
        for (const char *k : {"omega0", "omega1", "omega2"}) {
            if (auto it = seen.find(k); it != seen.end() && it->second > at) {
                at = it->second;
            }
        }
        throw ConfigError(at, "invariant", e.what());
    }
    return cfg;
}

/// Inverse of parse_config: parse_config(render_config(c)) == c.
inline std::string render_config(const RunConfig &cfg) {
    std::ostringstream out;
    out << "omega0 = " << format_number(cfg.params.omega[0]) << '\n'
        << "omega1 = " << format_number(cfg.params.omega[1]) << '\n'
        << "omega2 = " << format_number(cfg.params.omega[2]) << '\n'
        << "j = " << format_number(cfg.params.j) << '\n'
        << "j_prime = " << format_number(cfg.params.j_prime) << '\n'
        << "rabi = " << format_number(cfg.params.rabi) << '\n'
        << "initial = " << detail::render_initial(cfg.initial) << '\n';
    if (cfg.pulse_frequency) {
        out << "pulse_frequency = " << format_number(*cfg.pulse_frequency) << '\n';
    }
    if (cfg.duration) {
        out << "duration = " << format_number(*cfg.duration) << '\n';
    }
    out << "dt = " << format_number(cfg.dt) << '\n'
        << "stride = " << cfg.stride << '\n'
        << "out_prefix = " << cfg.out_prefix << '\n';
    return out.str();
}

/// Non-fatal findings to report before running.
inline std::vector<std::string> config_warnings(const RunConfig &cfg) {
    std::vector<std::string> w;
    if (cfg.params.j_prime > cfg.params.j / 10.0) {
        w.push_back("j_prime exceeds j/10; second-neighbour coupling is expected to be at least an order of "
                    "magnitude weaker than j");
    }
    if (cfg.params.j_prime < 0) {
        w.push_back("j_prime is negative");
    }
    return w;
}

/// Starting state for a run. Explicit amplitudes are scaled to unit norm.
inline RotatingState initial_state(const RunConfig &cfg) {
    if (const auto *b = std::get_if<BasisIndex>(&cfg.initial)) {
        return initial_digital(b->bit(2), b->bit(1), b->bit(0));
    }
    if (std::holds_alternative<Superposition>(cfg.initial)) {
        return initial_superposition();
    }
    RotatingState s{.d = std::get<Amplitudes>(cfg.initial), .t = 0.0};
    const double n = std::sqrt(squared_norm(s.d));
    for (auto &a : s.d) {
        a /= n;
    }
    return s;
}

}  // namespace ccnsim
