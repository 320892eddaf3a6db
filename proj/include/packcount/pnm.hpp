#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "packcount/errors.hpp"
#include "packcount/image.hpp"

namespace packcount {

// Decoded PNM payload: P5 yields GrayImage, P6 yields RgbImage.
using PnmImage = std::variant<GrayImage, RgbImage>;

namespace detail {

inline bool pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Header tokenizer. Any run of whitespace separates tokens and '#' starts a
// comment running to end of line.
struct PnmCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    void skip_separators() {
        while (pos < bytes.size()) {
            if (pnm_space(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long next_uint(const char* field) {
        skip_separators();
        if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
            throw MalformedHeader(std::string("pnm: expected numeric ") + field);
        long v = 0;
        while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1000000000L)
                throw MalformedHeader(std::string("pnm: ") + field + " out of range");
            ++pos;
        }
        return v;
    }
};

}  // namespace detail

// Decode a binary graymap (P5) or pixmap (P6) with maxval 255.
inline PnmImage read_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw MalformedHeader("pnm: magic must be P5 or P6");
    const bool color = bytes[1] == '6';

    detail::PnmCursor cur{bytes, 2};
    const long w = cur.next_uint("width");
    const long h = cur.next_uint("height");
    const long maxval = cur.next_uint("maxval");
    if (w < 1 || h < 1)
        throw MalformedHeader("pnm: image dimensions must be positive");
    if (maxval != 255)
        throw UnsupportedMaxval("pnm: only maxval 255 is supported");

    // Exactly one whitespace byte separates the maxval from the payload.
    if (cur.pos >= bytes.size() || !detail::pnm_space(bytes[cur.pos]))
        throw MalformedHeader("pnm: missing separator before payload");
    ++cur.pos;

    const std::size_t need = std::size_t(w) * std::size_t(h) * (color ? 3u : 1u);
    if (bytes.size() - cur.pos < need)
        throw TruncatedPayload("pnm: payload shorter than header promises");
    const std::uint8_t* p = bytes.data() + cur.pos;

    if (color) {
        RgbImage img{int(w), int(h), std::vector<std::uint8_t>(p, p + need)};
        return img;
    }
    GrayImage img{int(w), int(h), std::vector<std::uint8_t>(p, p + need)};
    return img;
}

inline std::vector<std::uint8_t> write_pnm(const GrayImage& img) {
    std::string header = "P5\n" + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

inline std::vector<std::uint8_t> write_pnm(const RgbImage& img) {
    std::string header = "P6\n" + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

}  // namespace packcount
