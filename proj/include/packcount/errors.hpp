#pragma once

#include <stdexcept>

namespace packcount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// codec
struct MalformedHeader : Error { using Error::Error; };
struct UnsupportedMaxval : Error { using Error::Error; };
struct TruncatedPayload : Error { using Error::Error; };

// filtering / gradients
struct InvalidSigma : Error { using Error::Error; };
struct ImageTooSmall : Error { using Error::Error; };

// histogram / thresholding
struct EmptyImage : Error { using Error::Error; };
struct EmptyHistogram : Error { using Error::Error; };
struct DegenerateHistogram : Error { using Error::Error; };

// synthetic scenes
struct InvalidSpec : Error { using Error::Error; };

}  // namespace packcount
