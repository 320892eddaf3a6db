#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "packcount/errors.hpp"
#include "packcount/image.hpp"

namespace packcount {

struct Histogram256 {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;

    int occupied() const {
        int n = 0;
        for (std::uint64_t c : counts) n += c != 0;
        return n;
    }
};

inline Histogram256 histogram(const GrayImage& src) {
    if (src.empty()) throw EmptyImage("histogram: empty image");
    Histogram256 h;
    for (std::uint8_t v : src.data) ++h.counts[v];
    h.total = src.pixel_count();
    return h;
}

// Cut points t1 < t2 (< t3) splitting [0,255] into classes (t[j-1], t[j]],
// with t0 = -1 and the last class running to 255. `variance` is the
// between-class variance achieved by these cut points.
struct OtsuThresholds {
    std::vector<int> levels;
    double variance = 0.0;
};

// Between-class variance sum_j w_j*(mu_j - mu_T)^2 at the given cut points.
// Empty classes contribute zero.
inline double between_class_variance(const Histogram256& hist,
                                     std::span<const int> levels) {
    const double n_total = double(hist.total);
    std::uint64_t weighted = 0;
    for (int v = 0; v < 256; ++v) weighted += std::uint64_t(v) * hist.counts[std::size_t(v)];
    const double mu_total = double(weighted) / n_total;

    double var = 0.0;
    int lo = -1;
    for (std::size_t j = 0; j <= levels.size(); ++j) {
        const int hi = j < levels.size() ? levels[j] : 255;
        std::uint64_t n = 0, s = 0;
        for (int v = lo + 1; v <= hi; ++v) {
            n += hist.counts[std::size_t(v)];
            s += std::uint64_t(v) * hist.counts[std::size_t(v)];
        }
        if (n != 0) {
            const double mu = double(s) / double(n);
            const double d = mu - mu_total;
            var += (double(n) / n_total) * d * d;
        }
        lo = hi;
    }
    return var;
}

// Exhaustive maximization of the between-class variance over all strictly
// increasing cut-point tuples in [0,254]. `classes` is 2 (one cut) or 4
// (three cuts). Prefix tables over the histogram make each candidate O(1);
// the full k=4 sweep is ~2.7M candidates. Ties resolve to the
// lexicographically smallest tuple (the scan visits tuples in ascending
// order and only strictly better candidates replace the incumbent).
//
// Candidates are compared by sum_j s_j^2/n_j, which orders identically to
// the variance: the class counts and sums are exact integers, so equal
// classes produce bit-equal doubles.
inline OtsuThresholds otsu_multilevel(const Histogram256& hist, int classes) {
    if (classes != 2 && classes != 4)
        throw std::invalid_argument("otsu_multilevel: classes must be 2 or 4");
    if (hist.total == 0) throw EmptyHistogram("otsu_multilevel: empty histogram");
    if (hist.occupied() < classes)
        throw DegenerateHistogram("otsu_multilevel: fewer occupied bins than classes");

    // P[i] = count of bins < i, Q[i] = intensity-weighted count of bins < i.
    std::array<std::uint64_t, 257> P{}, Q{};
    for (int v = 0; v < 256; ++v) {
        P[std::size_t(v) + 1] = P[std::size_t(v)] + hist.counts[std::size_t(v)];
        Q[std::size_t(v) + 1] = Q[std::size_t(v)] + std::uint64_t(v) * hist.counts[std::size_t(v)];
    }

    // Contribution of class (lo, hi] to sum_j s_j^2/n_j.
    auto term = [&](int lo, int hi) -> double {
        const std::uint64_t n = P[std::size_t(hi) + 1] - P[std::size_t(lo) + 1];
        if (n == 0) return 0.0;
        const double s = double(Q[std::size_t(hi) + 1] - Q[std::size_t(lo) + 1]);
        return s * s / double(n);
    };

    std::vector<int> best;
    double best_u = -1.0;
    if (classes == 2) {
        for (int t = 0; t <= 254; ++t) {
            const double u = term(-1, t) + term(t, 255);
            if (u > best_u) {
                best_u = u;
                best = {t};
            }
        }
    } else {
        for (int t1 = 0; t1 <= 252; ++t1) {
            const double u1 = term(-1, t1);
            for (int t2 = t1 + 1; t2 <= 253; ++t2) {
                const double u12 = u1 + term(t1, t2);
                for (int t3 = t2 + 1; t3 <= 254; ++t3) {
                    const double u = u12 + term(t2, t3) + term(t3, 255);
                    if (u > best_u) {
                        best_u = u;
                        best = {t1, t2, t3};
                    }
                }
            }
        }
    }

    OtsuThresholds result;
    result.levels = std::move(best);
    result.variance = between_class_variance(hist, result.levels);
    return result;
}

// Map each pixel to its class representative: {0,255} for one cut point,
// {0,85,170,255} for three.
inline GrayImage apply_thresholds(const GrayImage& src, const OtsuThresholds& t) {
    static constexpr std::uint8_t kTwoTone[2] = {0, 255};
    static constexpr std::uint8_t kFourTone[4] = {0, 85, 170, 255};
    const std::uint8_t* reps = t.levels.size() == 1 ? kTwoTone : kFourTone;

    std::array<std::uint8_t, 256> lut;
    for (int v = 0; v < 256; ++v) {
        std::size_t cls = t.levels.size();
        for (std::size_t j = 0; j < t.levels.size(); ++j) {
            if (v <= t.levels[j]) {
                cls = j;
                break;
            }
        }
        lut[std::size_t(v)] = reps[cls];
    }

    GrayImage out{src.width, src.height, std::vector<std::uint8_t>(src.pixel_count())};
    for (std::size_t i = 0; i < src.data.size(); ++i) out.data[i] = lut[src.data[i]];
    return out;
}

}  // namespace packcount
