#pragma once

#include <stdexcept>

namespace hurwitz {

/// Raised when a request exceeds its configured enumeration or table cap.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hurwitz
