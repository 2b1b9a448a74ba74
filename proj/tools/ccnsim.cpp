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

// Command-line front end: `ccnsim {spectrum|run|sweep} --config <path>`.
//
// Exit status: 0 success, 1 usage or config error, 2 numerical invariant
// violated, 3 I/O failure. Failures print `error[<reason>]: <message>`.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccnsim/ccnsim.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigFailure = 1, kInvariantFailure = 2, kIoFailure = 3 };

int fail(ExitCode code, const std::string &reason, const std::string &message) {
    std::cerr << "error[" << reason << "]: " << message << '\n';
    return code;
}

ccnsim::RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ccnsim::IoError(path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return ccnsim::parse_config(text.str());
}

std::vector<double> parse_jprimes(const std::string &list) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        if (comma == std::string::npos) {
            comma = list.size();
        }
        auto v = ccnsim::parse_number(std::string_view(list).substr(pos, comma - pos));
        if (!v) {
            throw ccnsim::ConfigError(0, "malformed_number", "--jprimes: bad value in '" + list + "'");
        }
        if (*v < 0) {
            throw ccnsim::ConfigError(0, "invariant", "--jprimes: values must be >= 0");
        }
        out.push_back(*v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-pulse Toffoli gate simulator for a three-spin Ising chain"};
    app.set_version_flag("--version", std::string(ccnsim::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    auto *spectrum = app.add_subcommand("spectrum", "energy levels and single-flip transition frequencies");
    auto *run = app.add_subcommand("run", "one CCN pulse: time series and final fidelity");
    auto *sweep = app.add_subcommand("sweep", "final fidelity versus second-neighbour coupling");
    for (auto *sub : {spectrum, run, sweep}) {
        sub->add_option("--config", config_path, "key = value configuration file")->required();
    }
    std::string jprimes;
    sweep->add_option("--jprimes", jprimes, "comma-separated J' values (default 0,0.02,0.04,0.06,0.08,0.1)");

    CLI11_PARSE(app, argc, argv);

    try {
        const ccnsim::RunConfig cfg = load_config(config_path);
        for (const auto &w : ccnsim::config_warnings(cfg)) {
            std::cerr << "warning: " << w << '\n';
        }
        if (spectrum->parsed()) {
            ccnsim::cmd_spectrum(cfg);
            std::cout << ccnsim::spectrum_path(cfg) << '\n';
        } else if (run->parsed()) {
            const auto r = ccnsim::cmd_run(cfg);
            std::cout << ccnsim::timeseries_path(cfg) << '\n'
                      << ccnsim::summary_path(cfg) << '\n'
                      << "fidelity " << ccnsim::format_complex(r.fidelity.value) << " |F| "
                      << ccnsim::format_number(r.fidelity.modulus()) << '\n';
        } else {
            if (cfg.pulse_frequency || cfg.duration) {
                std::cerr << "warning: sweep ignores pulse_frequency and duration; each point uses its own "
                             "CCN resonance and pi pulse\n";
            }
            std::vector<double> values = jprimes.empty()
                                             ? std::vector<double>(ccnsim::kDefaultJPrimes.begin(),
                                                                   ccnsim::kDefaultJPrimes.end())
                                             : parse_jprimes(jprimes);
            ccnsim::cmd_sweep(cfg, values);
            std::cout << ccnsim::sweep_path(cfg) << '\n';
        }
    } catch (const ccnsim::ConfigError &e) {
        return fail(kConfigFailure, e.reason(), e.what());
    } catch (const ccnsim::IoError &e) {
        return fail(kIoFailure, "io", e.what());
    } catch (const ccnsim::NormDriftError &e) {
        return fail(kInvariantFailure, "norm_drift", e.what());
    } catch (const ccnsim::InvariantError &e) {
        return fail(kInvariantFailure, "norm_drift", e.what());
    } catch (const std::invalid_argument &e) {
        return fail(kInvariantFailure, "normalization", e.what());
    }
    return kOk;
}
