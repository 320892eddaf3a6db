#pragma once

#include <algorithm>

#include "packcount/image.hpp"

namespace packcount {

// HSV saturation plane scaled to [0,255]. Black pixels (max channel 0) map
// to 0, as do grays. Hue and value are never computed.
inline GrayImage saturation(const RgbImage& src) {
    GrayImage out{src.width, src.height,
                  std::vector<std::uint8_t>(src.pixel_count())};
    for (std::size_t i = 0; i < out.data.size(); ++i) {
        const std::uint8_t r = src.data[3 * i];
        const std::uint8_t g = src.data[3 * i + 1];
        const std::uint8_t b = src.data[3 * i + 2];
        const std::uint8_t mx = std::max({r, g, b});
        const std::uint8_t mn = std::min({r, g, b});
        out.data[i] = mx == 0 ? std::uint8_t(0)
                              : quantize_u8(255.0 * double(mx - mn) / double(mx));
    }
    return out;
}

}  // namespace packcount
