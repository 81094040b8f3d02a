#pragma once

#include <stdexcept>
#include <string>

namespace iann {

/// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejected arguments: bad dimensions, out-of-range values, bad configs.
struct validation_error : error {
    using error::error;
};

/// Malformed input text: dataset records, FRI files, model JSON.
struct parse_error : error {
    using error::error;
};

/// Non-finite numbers detected where the contract requires finite ones.
struct numeric_error : error {
    using error::error;
};

}  // namespace iann
