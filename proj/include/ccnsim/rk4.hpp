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
#include <cstddef>

namespace ccnsim {

// Classical fixed-step fourth-order Runge-Kutta step for y' = f(t, y) on a
// fixed-size array state. `f` is called as f(t, y) and returns dy/dt.
template <typename T, std::size_t N, typename Rhs>
std::array<T, N> rk4_step(Rhs &&f, double t, const std::array<T, N> &y, double h) {
    const auto axpy = [](const std::array<T, N> &base, double a, const std::array<T, N> &dir) {
        std::array<T, N> out;
        for (std::size_t i = 0; i < N; ++i) {
            out[i] = base[i] + a * dir[i];
        }
        return out;
    };
    const double half = 0.5 * h;
    const std::array<T, N> k1 = f(t, y);
    const std::array<T, N> k2 = f(t + half, axpy(y, half, k1));
    const std::array<T, N> k3 = f(t + half, axpy(y, half, k2));
    const std::array<T, N> k4 = f(t + h, axpy(y, h, k3));
    std::array<T, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
    return out;
}

}  // namespace ccnsim
