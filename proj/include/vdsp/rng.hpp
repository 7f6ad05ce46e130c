// Copyright 2026 VDSP Contributors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <string>
#include <string_view>

namespace vdsp {

inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random stream. All distribution math is spelled out here
/// rather than delegated to std distributions, so identical seeds give
/// bit-identical sequences on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Derive an independent stream from a base seed and a stream label.
    static Rng stream(uint64_t base_seed, std::string_view label) {
        return Rng(fnv1a64(label, base_seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    }

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    uint64_t uniform_index(uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    /// Standard normal via Box-Muller; one draw consumes exactly two uniforms.
    double gauss() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double gauss(double mean, double stddev) { return mean + stddev * gauss(); }

    /// Lowercase hex string of `bytes` random bytes.
    std::string hex(size_t bytes) {
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(bytes * 2);
        uint64_t word = 0;
        int avail = 0;
        for (size_t i = 0; i < bytes; ++i) {
            if (avail == 0) {
                word = engine_();
                avail = 8;
            }
            unsigned byte = word & 0xff;
            word >>= 8;
            --avail;
            out.push_back(digits[byte >> 4]);
            out.push_back(digits[byte & 0xf]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace vdsp
