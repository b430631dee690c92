#pragma once

#include <utility>
#include <vector>

#include "cwave/radial.hpp"

namespace cwave {

/// Bound state of H = -(1/2m) Lap - W, radial s-wave in n dimensions,
/// normalized in L^2(r^{n-1} dr).
struct SchrodingerEigenpair {
    double E = 0.0;
    RadialGrid grid;
    std::vector<double> phi;
    int node_count = 0;
    double mass = 1.0;
    int dim = 3;
};

struct SchrodingerOptions {
    int dim = 3;
    double r_max = 30.0;
    int n_r = 3000;
    double rtol = 1e-11;
    double bisect_tol = 1e-13;     // relative bracket width on E
    bool enforce_boundary = true;  // |phi(r_max)| < 1e-10 * max |phi|
};

/// Shooting solve for the bound state with the requested node count;
/// throws NoBoundStateError when the potential does not support it.
SchrodingerEigenpair schrodinger_eigen(const RadialPotential& W, double m, int node_count,
                                       const SchrodingerOptions& opt = {});

struct TuneResult {
    RadialPotential W;  // Gaussian family
    double E0 = 0.0, E1 = 0.0;
    int newton_iterations = 0;
};

/// Finds Gaussian (depth, width) with ground/excited s-levels at -1 and
/// -1/2 for the given mass, by 2D quasi-Newton with a finite-difference
/// Jacobian. Throws RootFindFailedError with the last residuals on failure.
TuneResult tune_potential(double m, double tol = 1e-9, const SchrodingerOptions& opt = {});

/// Nonrelativistic seed of the Dirac profiles: v(r) = phi(sqrt(m-omega) r)
/// resampled on out_grid, u = -v'/(2m) by centered differences.
std::pair<std::vector<double>, std::vector<double>> nonrelativistic_seed(
    const SchrodingerEigenpair& phi, double m, double omega, const RadialGrid& out_grid);

}  // namespace cwave
