#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cwave {

inline constexpr const char* kVersion = "cwave 0.1.0";

using Complex = std::complex<double>;

/// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatchError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct NoBoundStateError : Error {
    using Error::Error;
};
struct NoEigenvalueError : Error {
    using Error::Error;
};
struct NodeMismatchError : Error {
    using Error::Error;
};
struct RootFindFailedError : Error {
    using Error::Error;
};
struct NonMonotoneInputError : Error {
    using Error::Error;
};
struct BlowUpError : Error {
    using Error::Error;
};

}  // namespace cwave
