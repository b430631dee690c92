#pragma once

#include <string>
#include <vector>

#include "cwave/grid.hpp"
#include "cwave/interp.hpp"

namespace cwave {

/// Positive, strictly decreasing radial potential vanishing at infinity.
/// Gaussian family depth * exp(-r^2/width^2) is the tunable one; Coulomb
/// z/r serves as an analytic test oracle; tabulated holds resampled data.
struct RadialPotential {
    enum class Family { Gaussian, Coulomb, Tabulated };

    Family family = Family::Gaussian;
    double depth = 1.0;  // Gaussian depth A (> 0)
    double width = 1.0;  // Gaussian width sigma (> 0)
    double z = 1.0;      // Coulomb strength

    RadialGrid grid;                // tabulated only
    std::vector<double> samples;    // tabulated only
    MonotoneCubic interp;           // built lazily for tabulated

    static RadialPotential gaussian(double depth, double width);
    static RadialPotential coulomb(double z);
    static RadialPotential tabulated(const RadialGrid& grid, std::vector<double> samples);

    double operator()(double r) const;
    bool singular_at_origin() const { return family == Family::Coulomb; }

    /// Sampled shape check: positive and strictly decreasing, small at the
    /// given radius. Coulomb is exempt from the origin check (singular).
    void validate_shape(double r_max) const;

    std::string family_name() const;
};

/// V(r) = (m - omega) W(sqrt(m - omega) r). Gaussian stays Gaussian
/// (depth and width rescale exactly); tabulated input is resampled on its
/// own grid. Throws ConfigError when omega is outside (0, m).
RadialPotential scale_to_dirac_potential(const RadialPotential& W, double m, double omega);

/// Composite Simpson on a uniform grid (odd or even node count).
double integrate_uniform(const std::vector<double>& f, double dx);

}  // namespace cwave
