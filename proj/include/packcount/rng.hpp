#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace packcount {

// splitmix64 step, used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic random source for the synthetic corpus. The engine is the
// standard 64-bit Mersenne twister (bit-exact across platforms); the
// derived draws are written out here so regenerated corpora stay identical:
//   u64:        one engine step
//   unit():     (u64 >> 11) * 2^-53, in [0,1)
//   uniform_int(lo,hi): lo + floor(unit() * (hi-lo+1)), clamped to hi
//   normal(sigma):      Box-Muller on two unit() draws, second value cached
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    double unit() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::int64_t span = hi - lo + 1;
        std::int64_t v = lo + std::int64_t(unit() * double(span));
        return v > hi ? hi : v;
    }

    double normal(double sigma) {
        if (have_spare_) {
            have_spare_ = false;
            return spare_ * sigma;
        }
        const double u1 = 1.0 - unit();  // (0,1], keeps the log finite
        const double u2 = unit();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
        have_spare_ = true;
        return mag * std::cos(2.0 * std::numbers::pi * u2) * sigma;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Seed for the i-th member of a family keyed by `root`.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return splitmix64(root ^ (0xA5A5A5A5A5A5A5A5ULL + index * 0x9E3779B97F4A7C15ULL));
}

}  // namespace packcount
