// Copyright (c) 2026 The nspkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace nspkit {

/// Seeded generator with fully reproducible output. The engine is
/// std::mt19937_64 (bit-exact across platforms by the standard) and the
/// uniform/normal transforms are spelled out here instead of relying on
/// std::*_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (no cached spare, one value per call).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform index in [0, n) by rejection, unbiased.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("Rng::uniform_index: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return static_cast<std::size_t>(v % n);
    }

    std::vector<double> normal_vector(std::size_t n) {
        std::vector<double> v(n);
        for (auto& x : v) x = normal();
        return v;
    }

    /// Uniformly random direction on the unit sphere of R^n.
    std::vector<double> unit_vector(std::size_t n) {
        for (;;) {
            std::vector<double> v = normal_vector(n);
            double s = 0.0;
            for (double x : v) s += x * x;
            s = std::sqrt(s);
            if (s > 1e-12) {
                for (auto& x : v) x /= s;
                return v;
            }
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Deterministic per-index sub-seed for parallel-safe instance loops:
/// the base seed combined with the index through the splitmix64 finalizer.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace nspkit
