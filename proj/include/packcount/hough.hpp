#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "packcount/errors.hpp"
#include "packcount/sobel.hpp"

namespace packcount {

struct HoughParams {
    int r_min = 10;
    int r_max = 60;
    int theta_step = 1;           // degrees; must divide 360
    double vote_fraction = 0.45;  // minimum score for a candidate peak
    int min_center_dist = 10;     // pixels between accepted centers

    void validate() const {
        if (r_min < 1 || r_min > r_max)
            throw std::invalid_argument("hough: need 1 <= r_min <= r_max");
        if (theta_step < 1 || theta_step > 360 || 360 % theta_step != 0)
            throw std::invalid_argument("hough: theta_step must divide 360");
        if (!(vote_fraction > 0.0) || vote_fraction > 1.0)
            throw std::invalid_argument("hough: vote_fraction must be in (0,1]");
        if (min_center_dist < 1)
            throw std::invalid_argument("hough: min_center_dist must be >= 1");
    }
};

// Vote array over candidate centers and radii, stored as one contiguous
// block of radius slices: votes[((r - r_min)*height + y)*width + x].
struct HoughAccumulator {
    int width = 0;
    int height = 0;
    int r_min = 0;
    int r_max = 0;
    std::vector<std::uint32_t> votes;

    int radii() const { return r_max - r_min + 1; }
    std::uint32_t at(int x, int y, int r) const {
        return votes[(std::size_t(r - r_min) * height + std::size_t(y)) * width + std::size_t(x)];
    }
};

struct DetectedCircle {
    int cx = 0;
    int cy = 0;
    int radius = 0;
    std::uint32_t votes = 0;
    double score = 0.0;  // votes normalized by the 360/theta_step ideal
};

// Every edge pixel votes for all centers it could lie on: for each radius
// and each theta sample in [0,360), the candidate center is
// (x - r*cos(theta), y - r*sin(theta)) rounded to the nearest cell.
// Out-of-image candidates are dropped. Radius slices are filled one at a
// time so the hot loop stays inside a single slice.
inline HoughAccumulator accumulate(const EdgeMap& edges, const HoughParams& p) {
    p.validate();
    const int w = edges.mask.width;
    const int h = edges.mask.height;
    if (w < 2 * p.r_min || h < 2 * p.r_min)
        throw ImageTooSmall("accumulate: image smaller than the minimum diameter");

    HoughAccumulator acc{w, h, p.r_min, p.r_max,
                         std::vector<std::uint32_t>(std::size_t(w) * h * std::size_t(p.r_max - p.r_min + 1), 0)};

    std::vector<std::pair<int, int>> edge_px;
    edge_px.reserve(edges.edge_count);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (edges.mask.at(x, y) == 255) edge_px.emplace_back(x, y);

    const int steps = 360 / p.theta_step;
    std::vector<double> dx(std::size_t(steps)), dy(std::size_t(steps));
    for (int r = p.r_min; r <= p.r_max; ++r) {
        for (int k = 0; k < steps; ++k) {
            const double rad = double(k * p.theta_step) * std::numbers::pi / 180.0;
            dx[std::size_t(k)] = double(r) * std::cos(rad);
            dy[std::size_t(k)] = double(r) * std::sin(rad);
        }
        std::uint32_t* slice = acc.votes.data() + std::size_t(r - p.r_min) * w * h;
        for (const auto& [x, y] : edge_px) {
            for (int k = 0; k < steps; ++k) {
                const long a = std::lround(double(x) - dx[std::size_t(k)]);
                const long b = std::lround(double(y) - dy[std::size_t(k)]);
                if (a >= 0 && a < w && b >= 0 && b < h) ++slice[std::size_t(b) * w + a];
            }
        }
    }
    return acc;
}

// Peak extraction: every cell scoring at least vote_fraction is a candidate;
// candidates are ranked by score (ties: smaller radius, then smaller (y,x))
// and greedily accepted when at least min_center_dist away from every
// already-accepted center. Result stays in rank order.
inline std::vector<DetectedCircle> find_circles(const HoughAccumulator& acc,
                                                const HoughParams& p) {
    p.validate();
    const double ideal = 360.0 / p.theta_step;

    std::vector<DetectedCircle> cand;
    for (int r = acc.r_min; r <= acc.r_max; ++r) {
        const std::uint32_t* slice =
            acc.votes.data() + std::size_t(r - acc.r_min) * acc.width * acc.height;
        for (int y = 0; y < acc.height; ++y) {
            for (int x = 0; x < acc.width; ++x) {
                const std::uint32_t v = slice[std::size_t(y) * acc.width + x];
                if (v == 0) continue;
                const double score = double(v) / ideal;
                if (score >= p.vote_fraction)
                    cand.push_back(DetectedCircle{x, y, r, v, score});
            }
        }
    }

    std::sort(cand.begin(), cand.end(), [](const DetectedCircle& a, const DetectedCircle& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.radius != b.radius) return a.radius < b.radius;
        if (a.cy != b.cy) return a.cy < b.cy;
        return a.cx < b.cx;
    });

    std::vector<DetectedCircle> kept;
    const long min_d2 = long(p.min_center_dist) * long(p.min_center_dist);
    for (const DetectedCircle& c : cand) {
        bool clear = true;
        for (const DetectedCircle& k : kept) {
            const long ddx = c.cx - k.cx;
            const long ddy = c.cy - k.cy;
            if (ddx * ddx + ddy * ddy < min_d2) {
                clear = false;
                break;
            }
        }
        if (clear) kept.push_back(c);
    }
    return kept;
}

struct CountResult {
    int count = 0;
    std::vector<DetectedCircle> circles;
};

inline CountResult count_circles(const EdgeMap& edges, const HoughParams& p) {
    const HoughAccumulator acc = accumulate(edges, p);
    CountResult res;
    res.circles = find_circles(acc, p);
    res.count = int(res.circles.size());
    return res;
}

}  // namespace packcount
