#pragma once

#include <limits>
#include <vector>

#include "cwave/grid.hpp"

namespace cwave {

inline constexpr double kPlusInf = std::numeric_limits<double>::infinity();
inline constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

/// Per-x values in R united with {+inf, -inf}. Houses the support edge
/// functions a_f, b_f; +inf in a_f marks the same empty columns as -inf
/// in b_f.
struct EdgeFunction {
    Axis x;
    std::vector<double> value;

    EdgeFunction() = default;
    EdgeFunction(Axis axis, double fill = 0.0) : x(axis), value(axis.n, fill) {}

    double operator[](int i) const { return value[i]; }
    double& operator[](int i) { return value[i]; }
    int size() const { return static_cast<int>(value.size()); }
};

/// Discrete lsc regularization: stencil min over {i-1, i, i+1} within range.
EdgeFunction lower_envelope(const EdgeFunction& mu);

/// Discrete usc regularization: stencil max over {i-1, i, i+1} within range.
EdgeFunction upper_envelope(const EdgeFunction& mu);

/// One-stencil oscillation, mu^U - mu^L; 0 where both envelopes agree
/// (including equal infinities).
EdgeFunction stencil_oscillation(const EdgeFunction& mu);

}  // namespace cwave
