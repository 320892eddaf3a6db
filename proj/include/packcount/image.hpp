#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace packcount {

// Row-major 8-bit single-channel raster.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // size == width * height

    static GrayImage filled(int w, int h, std::uint8_t v) {
        return GrayImage{w, h, std::vector<std::uint8_t>(std::size_t(w) * std::size_t(h), v)};
    }

    std::uint8_t at(int x, int y) const { return data[std::size_t(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[std::size_t(y) * width + x]; }
    std::size_t pixel_count() const { return data.size(); }
    bool empty() const { return data.empty(); }

    bool operator==(const GrayImage&) const = default;
};

// Row-major 8-bit raster with interleaved R,G,B samples.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // size == 3 * width * height

    static RgbImage filled(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        RgbImage img{w, h, std::vector<std::uint8_t>(3 * std::size_t(w) * std::size_t(h))};
        for (std::size_t i = 0; i < img.data.size(); i += 3) {
            img.data[i] = r;
            img.data[i + 1] = g;
            img.data[i + 2] = b;
        }
        return img;
    }

    std::uint8_t at(int x, int y, int channel) const {
        return data[3 * (std::size_t(y) * width + x) + channel];
    }
    std::uint8_t& at(int x, int y, int channel) {
        return data[3 * (std::size_t(y) * width + x) + channel];
    }
    std::size_t pixel_count() const { return std::size_t(width) * std::size_t(height); }
    bool empty() const { return data.empty(); }

    bool operator==(const RgbImage&) const = default;
};

// Double-precision raster carrying intermediate results between stages,
// so quantization happens once at the end of a stage.
struct FloatImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // size == width * height

    static FloatImage zeros(int w, int h) {
        return FloatImage{w, h, std::vector<double>(std::size_t(w) * std::size_t(h), 0.0)};
    }

    double at(int x, int y) const { return data[std::size_t(y) * width + x]; }
    double& at(int x, int y) { return data[std::size_t(y) * width + x]; }

    bool operator==(const FloatImage&) const = default;
};

// Round half up, then clamp to the 8-bit sample range.
inline std::uint8_t quantize_u8(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

}  // namespace packcount
