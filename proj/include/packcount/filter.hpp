#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "packcount/errors.hpp"
#include "packcount/image.hpp"

namespace packcount {

// 1-D Gaussian tap weights, truncated at radius = ceil(3*sigma) and
// renormalized to sum 1.
struct GaussianKernel {
    double sigma = 0.0;
    int radius = 0;
    std::vector<double> weights;  // size 2*radius+1, symmetric, max at center
};

inline GaussianKernel build_kernel(double sigma) {
    if (!(sigma > 0.0)) throw InvalidSigma("gaussian sigma must be > 0");
    const int radius = int(std::ceil(3.0 * sigma));
    std::vector<double> w(std::size_t(2 * radius + 1));
    double sum = 0.0;
    for (int i = 0; i <= 2 * radius; ++i) {
        const double d = double(i - radius);
        w[std::size_t(i)] = std::exp(-(d * d) / (2.0 * sigma * sigma));
        sum += w[std::size_t(i)];
    }
    for (double& x : w) x /= sum;
    return GaussianKernel{sigma, radius, std::move(w)};
}

// Separable Gaussian smoothing in real arithmetic: horizontal pass then
// vertical pass with the same 1-D kernel. Borders replicate the edge sample.
inline FloatImage gaussian_blur_real(const GrayImage& src, double sigma) {
    const GaussianKernel k = build_kernel(sigma);
    const int w = src.width;
    const int h = src.height;

    FloatImage tmp = FloatImage::zeros(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -k.radius; i <= k.radius; ++i) {
                const int xi = std::clamp(x + i, 0, w - 1);
                acc += k.weights[std::size_t(i + k.radius)] * double(src.at(xi, y));
            }
            tmp.at(x, y) = acc;
        }
    }

    FloatImage out = FloatImage::zeros(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -k.radius; i <= k.radius; ++i) {
                const int yi = std::clamp(y + i, 0, h - 1);
                acc += k.weights[std::size_t(i + k.radius)] * tmp.at(x, yi);
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

// Blur and quantize back to 8 bits. A single quantization at the end keeps
// the result equal to a direct 2-D convolution up to rounding.
inline GrayImage gaussian_blur(const GrayImage& src, double sigma) {
    const FloatImage real = gaussian_blur_real(src, sigma);
    GrayImage out{src.width, src.height,
                  std::vector<std::uint8_t>(src.pixel_count())};
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = quantize_u8(real.data[i]);
    return out;
}

}  // namespace packcount
