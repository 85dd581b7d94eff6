#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace icdof {

// Counter-based random stream. The state is derived from a (seed, id0, id1)
// key by SplitMix64-style mixing and advances by golden-ratio increments, so
// a stream is a pure function of its key. Distinct keys (one per trial, per
// group, ...) give statistically independent streams that can be consumed in
// any order and from any thread, which keeps Monte Carlo results independent
// of the degree of parallelism.
class TrialRng {
  public:
    explicit TrialRng(std::uint64_t seed, std::uint64_t id0 = 0,
                      std::uint64_t id1 = 0) noexcept {
        state_ = mix64(seed ^ 0x8BADF00D5DEECE66ull);
        state_ = mix64(state_ ^ mix64(id0 ^ 0xA3EC4E9302B3C915ull));
        state_ = mix64(state_ ^ mix64(id1 ^ 0x4BF5CA1E6FACE527ull));
    }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // Uniform on (0, 1]; never returns 0 so logs are safe.
    double next_unit() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Exponential with mean 1.
    double next_exp() noexcept { return -std::log(next_unit()); }

    // Standard normal, Box-Muller with a cached second component.
    double next_normal() noexcept {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double r = std::sqrt(-2.0 * std::log(next_unit()));
        const double t = kTwoPi * next_unit();
        cached_ = r * std::sin(t);
        have_cached_ = true;
        return r * std::cos(t);
    }

    // Circularly symmetric complex Gaussian CN(0,1): real and imaginary
    // parts are independent N(0, 1/2), so E|H|^2 = 1 and |H|^2 ~ Exp(1).
    std::complex<double> next_cgauss() noexcept {
        const double r = std::sqrt(-std::log(next_unit()));
        const double t = kTwoPi * next_unit();
        return {r * std::cos(t), r * std::sin(t)};
    }

  private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;

    static std::uint64_t mix64(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

// Stream ids (the id1 slot) keeping independent draw domains apart.
namespace stream {
inline constexpr std::uint64_t kChannel = 0;
inline constexpr std::uint64_t kPathloss = 1;
inline constexpr std::uint64_t kLatent = 2;
// Group g of a partitioned run uses kGroupBase + g.
inline constexpr std::uint64_t kGroupBase = 16;
}  // namespace stream

}  // namespace icdof
