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

#include "raysweep/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "raysweep/errors.hpp"

namespace raysweep {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

struct WalkOutcome {
    bool hit;
    bool censored;
};

// Distance from w to the ray {t e^{i theta0} : t >= 0} given as the unit direction dir.
inline double distance_to_ray(complex w, complex dir)
{
    const complex u = w * std::conj(dir);
    return u.real() >= 0.0 ? std::fabs(u.imag()) : std::abs(u);
}

class Walker {
public:
    Walker(complex z, const OracleTarget& target, const WalkConfig& cfg)
        : target_(target), cfg_(cfg)
    {
        if (const auto* hp = std::get_if<HalfPlaneInterval>(&target)) {
            if (!(z.imag() > 0.0)) {
                throw InputError("oracle needs z strictly inside the half-plane");
            }
            if (!(hp->t1 <= hp->t2)) {
                throw InputError("oracle interval needs t1 <= t2");
            }
            z_ = z;
            return;
        }
        const Sector& s = sector();
        if (!s.contains_open(z)) {
            throw InputError("oracle needs z strictly inside the sector");
        }
        // rotated frame: ray alpha along the positive reals
        z_ = z * std::polar(1.0, -s.alpha());
        beta_dir_ = std::polar(1.0, s.aperture());
        eps_ = cfg.boundary_eps * std::abs(z);
        if (!(eps_ > 0.0)) {
            throw InputError("boundary_eps must be positive");
        }
    }

    WalkOutcome run(std::uint64_t walk, PhiloxStream& rng) const
    {
        if (const auto* hp = std::get_if<HalfPlaneInterval>(&target_)) {
            const double t = z_.real() + z_.imag() * std::tan(kPi * (rng.uniform() - 0.5));
            return {t > hp->t1 && t < hp->t2, false};
        }
        complex w = z_;
        const complex alpha_dir(1.0, 0.0);
        for (long long step = 0; step < cfg_.max_steps; ++step) {
            const double da = distance_to_ray(w, alpha_dir);
            const double db = distance_to_ray(w, beta_dir_);
            const double d = std::min(da, db);
            if (d < eps_) {
                Side side;
                if (std::fabs(da - db) <= 1e-12 * std::max(da, db)) {
                    side = (walk % 2 == 0) ? Side::alpha : Side::beta;
                } else {
                    side = da < db ? Side::alpha : Side::beta;
                }
                return {absorbed_in_target(side, std::abs(w)), false};
            }
            w += std::polar(d, kTwoPi * rng.uniform());
        }
        return {false, true};
    }

private:
    const Sector& sector() const
    {
        if (const auto* iv = std::get_if<IntervalOnRay>(&target_)) {
            return iv->sector;
        }
        return std::get<SectorDiskTarget>(target_).sector;
    }

    bool absorbed_in_target(Side side, double radius) const
    {
        if (const auto* iv = std::get_if<IntervalOnRay>(&target_)) {
            return side == iv->side && radius > iv->r_lo && radius < iv->r_hi;
        }
        const auto& disk = std::get<SectorDiskTarget>(target_);
        const bool inside = radius <= disk.r;
        return disk.part == DiskPart::inside ? inside : !inside;
    }

    const OracleTarget& target_;
    const WalkConfig& cfg_;
    complex z_;
    complex beta_dir_{1.0, 0.0};
    double eps_ = 0.0;
};

} // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> c, std::array<std::uint32_t, 2> k)
{
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream)
{
}

std::uint64_t PhiloxStream::next_u64()
{
    if (used_ >= 4) {
        buf_ = philox4x32_10({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                              static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                             key_);
        ++block_;
        used_ = 0;
    }
    const std::uint64_t hi = buf_[static_cast<std::size_t>(used_)];
    const std::uint64_t lo = buf_[static_cast<std::size_t>(used_ + 1)];
    used_ += 2;
    return (hi << 32) | lo;
}

double PhiloxStream::uniform()
{
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

OracleEstimate estimate_omega(complex z, const OracleTarget& target, const WalkConfig& cfg)
{
    if (cfg.n_walks < 1) {
        throw InputError("n_walks must be at least 1");
    }
    if (cfg.max_steps < 1) {
        throw InputError("max_steps must be at least 1");
    }
    const Walker walker(z, target, cfg);

    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<long long>(cfg.n_walks, 1024))));

    std::vector<long long> hits(threads, 0);
    std::vector<long long> censored(threads, 0);
    auto work = [&](unsigned t) {
        const auto n = static_cast<std::uint64_t>(cfg.n_walks);
        const std::uint64_t begin = n * t / threads;
        const std::uint64_t end = n * (t + 1) / threads;
        for (std::uint64_t i = begin; i < end; ++i) {
            PhiloxStream rng(cfg.seed, i);
            const WalkOutcome o = walker.run(i, rng);
            hits[t] += o.hit ? 1 : 0;
            censored[t] += o.censored ? 1 : 0;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    OracleEstimate est;
    for (unsigned t = 0; t < threads; ++t) {
        est.hits += hits[t];
        est.censored += censored[t];
    }
    est.walks = cfg.n_walks - est.censored;
    if (est.walks > 0) {
        const double n = static_cast<double>(est.walks);
        est.mean = static_cast<double>(est.hits) / n;
        est.std_err = std::sqrt(est.mean * (1.0 - est.mean) / n);
    }
    return est;
}

} // namespace raysweep
