/*
   Copyright 2026 The raysweep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "raysweep/harmonic_measure.hpp"

namespace raysweep {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                            std::array<std::uint32_t, 2> key);

/**
 * Independent random stream for one (seed, stream index) pair: the seed is the
 * Philox key, the stream index and a block counter form the Philox counter.
 */
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next_u64();
    /// Uniform double in the open interval (0, 1).
    double uniform();

private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int used_ = 4;
};

struct WalkConfig {
    long long n_walks = 1000000;
    std::uint64_t seed = 42;
    double boundary_eps = 1e-6; ///< absorption distance, relative to |z|
    long long max_steps = 100000;
    int threads = 0;            ///< 0: use the hardware concurrency
};

/// Interval [t1, t2] of the real line for the upper half-plane.
struct HalfPlaneInterval {
    double t1;
    double t2;
};

/// Part of the sector boundary inside the closed disk of radius r (or outside).
struct SectorDiskTarget {
    Sector sector;
    double r;
    DiskPart part;
};

using OracleTarget = std::variant<HalfPlaneInterval, IntervalOnRay, SectorDiskTarget>;

struct OracleEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    long long hits = 0;
    long long walks = 0;     ///< completed walks
    long long censored = 0;  ///< walks stopped by max_steps
};

/**
 * Monte Carlo estimate of the harmonic measure of the target seen from z.
 * Half-plane targets sample the exit point exactly (Cauchy law); sector
 * targets run walk-on-spheres until the walk is within boundary_eps * |z| of
 * the boundary and attribute the exit to the nearer ray (ties alternate by
 * walk index). Results depend only on the seed and the configuration, not on
 * the thread count.
 */
OracleEstimate estimate_omega(complex z, const OracleTarget& target, const WalkConfig& cfg = {});

} // namespace raysweep
