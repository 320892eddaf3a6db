#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "packcount/errors.hpp"
#include "packcount/image.hpp"
#include "packcount/otsu.hpp"

namespace packcount {

struct GradientField {
    FloatImage gx;
    FloatImage gy;
    FloatImage magnitude;  // sqrt(gx^2 + gy^2), per pixel
};

// Correlation with the classic 3x3 derivative kernels. Borders replicate
// the edge sample, so flat images respond zero everywhere including edges.
inline GradientField sobel_gradients(const GrayImage& src) {
    if (src.width < 3 || src.height < 3)
        throw ImageTooSmall("sobel_gradients: image must be at least 3x3");

    static constexpr int kx[3][3] = {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}};
    static constexpr int ky[3][3] = {{1, 2, 1}, {0, 0, 0}, {-1, -2, -1}};

    const int w = src.width;
    const int h = src.height;
    GradientField g{FloatImage::zeros(w, h), FloatImage::zeros(w, h),
                    FloatImage::zeros(w, h)};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int sx = 0, sy = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                const int yy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    const int xx = std::clamp(x + dx, 0, w - 1);
                    const int v = src.at(xx, yy);
                    sx += kx[dy + 1][dx + 1] * v;
                    sy += ky[dy + 1][dx + 1] * v;
                }
            }
            g.gx.at(x, y) = double(sx);
            g.gy.at(x, y) = double(sy);
            g.magnitude.at(x, y) = std::sqrt(double(sx) * sx + double(sy) * sy);
        }
    }
    return g;
}

struct EdgeMap {
    GrayImage mask;              // samples in {0, 255}; 255 marks an edge
    std::size_t edge_count = 0;  // number of 255 samples
};

// Rescale the magnitude to [0,255], split with a two-class Otsu threshold,
// and keep the strictly-above pixels. A flat magnitude field (which includes
// the all-zero case) has no edges to find and yields an empty map.
inline EdgeMap binarize_edges(const GradientField& grad) {
    const FloatImage& mag = grad.magnitude;
    const int w = mag.width;
    const int h = mag.height;

    double mn = mag.data.empty() ? 0.0 : mag.data[0];
    double mx = mn;
    for (double v : mag.data) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    if (!(mx > mn)) return EdgeMap{GrayImage::filled(w, h, 0), 0};

    GrayImage scaled{w, h, std::vector<std::uint8_t>(mag.data.size())};
    const double scale = 255.0 / (mx - mn);
    for (std::size_t i = 0; i < mag.data.size(); ++i)
        scaled.data[i] = quantize_u8((mag.data[i] - mn) * scale);

    // Bins 0 and 255 are both occupied after rescaling, so the histogram is
    // never degenerate for a two-class split.
    const OtsuThresholds split = otsu_multilevel(histogram(scaled), 2);
    const int t = split.levels[0];

    EdgeMap em{GrayImage::filled(w, h, 0), 0};
    for (std::size_t i = 0; i < scaled.data.size(); ++i) {
        if (scaled.data[i] > t) {
            em.mask.data[i] = 255;
            ++em.edge_count;
        }
    }
    return em;
}

}  // namespace packcount
