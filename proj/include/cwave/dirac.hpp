#pragma once

#include <vector>

#include "cwave/radial.hpp"

namespace cwave {

/// Bound state of the radial Dirac system
///     omega v = (m - V) v + u' + ((n-1)/r) u
///     omega u = -v' - (m - V) u
/// normalized to unit L^2(r^{n-1} dr) norm of (v, u), with v(0) > 0.
struct RadialEigenpair {
    double omega = 0.0;
    RadialGrid grid;
    std::vector<double> v, u;
    int node_count = 0;  // nodes of v
    double residual = 0.0;  // sup-norm centered-difference eigen-residual
    double mass = 1.0;
    int dim = 3;
};

struct DiracOptions {
    int dim = 3;
    double rtol = 1e-12;
    double omega_tol = 1e-13;  // relative root tolerance on omega
    int scan_points = 48;
    int max_widenings = 6;
};

/// Shooting solve: regular branch from the origin, decaying branch from
/// r_max, Wronskian-type miss function matched in between; omega located
/// by scan + bracketed refinement inside [0.9, 1.1] * omega_guess, widened
/// geometrically on failure. Throws NoEigenvalueError / NodeMismatchError.
RadialEigenpair dirac_eigen(const RadialPotential& V, double m, double omega_guess,
                            int node_count, const RadialGrid& grid,
                            const DiracOptions& opt = {});

/// Sup-norm of the centered-difference eigen-residual together with the
/// scale it is measured against (contract: residual <= 10 dr^2 scale).
struct EigenResidual {
    double sup = 0.0;
    double scale = 1.0;
};
EigenResidual dirac_eigen_residual(const RadialEigenpair& pair, const RadialPotential& V);

/// One level of the banded finite-difference matrix discretization
/// (independent oracle for the shooting solver), Richardson-extrapolated
/// from n_r/2 and n_r. Levels are identified by the node count of v.
double dirac_matrix_level(const RadialPotential& V, double m, int node_count,
                          const RadialGrid& grid, int dim = 3);

/// All gap eigenvalues of the banded discretization on the given grid with
/// node counts, grid-scale (doubler) modes filtered out.
struct MatrixLevel {
    double omega;
    int node_count;
};
std::vector<MatrixLevel> dirac_matrix_levels(const RadialPotential& V, double m,
                                             const RadialGrid& grid, double omega_lo,
                                             double omega_hi, int dim = 3);

struct RhoMonotoneReport {
    bool v_positive = false;
    bool rho_strictly_decreasing = false;
    double first_violation_r = -1.0;  // < 0 when no violation
    bool pass() const { return v_positive && rho_strictly_decreasing; }
};

/// Checks v_0 > 0 and rho = v^2 - u^2 strictly decreasing above the noise
/// floor 1e-12 * max rho.
RhoMonotoneReport check_rho_monotone(const RadialEigenpair& ground);

}  // namespace cwave
