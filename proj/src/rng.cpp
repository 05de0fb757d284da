// SPDX-License-Identifier: Apache-2.0
#include "nomaftr/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace nomaftr::rng {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t product = std::uint64_t(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Counter philox4x32(Counter ctr, Key key)
{
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

Stream::Stream(std::uint64_t seed, std::uint32_t chunk, std::uint32_t tag)
    : counter_{0, 0, chunk, tag},
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
{
}

std::uint32_t Stream::next32()
{
    if (used_ == 4) {
        block_ = philox4x32(counter_, key_);
        if (++counter_[0] == 0)
            ++counter_[1];
        used_ = 0;
    }
    return block_[used_++];
}

Stream::result_type Stream::operator()()
{
    const std::uint64_t hi = next32();
    return (hi << 32) | next32();
}

double Stream::uniform()
{
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1p-53;
}

double Stream::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2 * std::log(uniform()));
    const double angle = 2 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

double Stream::gamma(double shape)
{
    if (shape < 1) {
        const double boost = std::pow(uniform(), 1 / shape);
        return gamma(shape + 1) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1 / std::sqrt(9 * d);
    while (true) {
        double x, v;
        do {
            x = normal();
            v = 1 + c * x;
        } while (v <= 0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1 - v + std::log(v)))
            return d * v;
    }
}

unsigned worker_count()
{
    if (const char* env = std::getenv("NOMAFTR_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace nomaftr::rng
