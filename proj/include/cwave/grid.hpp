#pragma once

#include <cmath>
#include <cstddef>

#include "cwave/common.hpp"

namespace cwave {

/// Uniform 1D axis with n nodes from min to max inclusive, n >= 2.
struct Axis {
    double min = 0.0;
    double max = 1.0;
    int n = 2;

    double step() const { return (max - min) / (n - 1); }
    double at(int i) const { return min + i * step(); }

    /// Nearest node index, clamped to range.
    int index_of(double v) const {
        int i = static_cast<int>(std::lround((v - min) / step()));
        if (i < 0) i = 0;
        if (i >= n) i = n - 1;
        return i;
    }

    void validate(const char* name) const {
        if (n < 2) throw ConfigError(std::string(name) + ": axis needs n >= 2");
        if (!(max > min)) throw ConfigError(std::string(name) + ": axis needs max > min");
    }

    bool operator==(const Axis&) const = default;
};

/// (x, omega) product grid; x stands for the spatial coordinate, omega for
/// the spectral variable of the partial transform.
struct Grid2 {
    Axis x;
    Axis omega;

    void validate() const {
        x.validate("x");
        omega.validate("omega");
    }

    bool operator==(const Grid2&) const = default;
};

/// Uniform radial grid r_i = i * dr, i = 0..n_r (n_r + 1 nodes).
struct RadialGrid {
    double r_max = 1.0;
    int n_r = 1;

    double dr() const { return r_max / n_r; }
    double at(int i) const { return i * dr(); }
    int nodes() const { return n_r + 1; }

    void validate() const {
        if (!(r_max > 0.0)) throw ConfigError("RadialGrid: r_max must be positive");
        if (n_r < 1) throw ConfigError("RadialGrid: n_r must be >= 1");
    }

    bool operator==(const RadialGrid&) const = default;
};

}  // namespace cwave
