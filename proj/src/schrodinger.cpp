#include "cwave/schrodinger.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>

namespace odeint = boost::numeric::odeint;

namespace cwave {

namespace {

using State = std::array<double, 2>;  // {P, P'}

// Reduced radial equation P'' = S(r) P with
// S = 2m(-E - W) + (n-1)(n-3)/(4 r^2); P = r^{(n-1)/2} phi.
struct ReducedEq {
    const RadialPotential* W;
    double m, E;
    double cn;  // (n-1)(n-3)/4

    void operator()(const State& y, State& dy, double r) const {
        const double S = 2.0 * m * (-E - (*W)(r)) + cn / (r * r);
        dy[0] = y[1];
        dy[1] = S * y[0];
    }
};

auto controlled(double rtol) {
    return odeint::make_controlled(1e-280, rtol, odeint::runge_kutta_dopri5<State>());
}

// Outward sweep counting sign changes of P, with periodic renormalization
// so deep trial energies cannot overflow.
int outward_node_count(const RadialPotential& W, double m, int dim, double E, double r_lo,
                       double r_hi, double rtol) {
    ReducedEq eq{&W, m, E, 0.25 * (dim - 1) * (dim - 3)};
    State y{r_lo, 1.0};
    int nodes = 0;
    double prev_sign = 0.0;
    auto stepper = controlled(rtol);
    const int samples = 2048;
    for (int s = 0; s < samples; ++s) {
        const double a = r_lo + (r_hi - r_lo) * s / samples;
        const double b = r_lo + (r_hi - r_lo) * (s + 1) / samples;
        odeint::integrate_adaptive(stepper, eq, y, a, b, 0.5 * (b - a));
        const double sg = y[0] > 0 ? 1.0 : (y[0] < 0 ? -1.0 : 0.0);
        if (sg != 0.0 && prev_sign != 0.0 && sg != prev_sign) ++nodes;
        if (sg != 0.0) prev_sign = sg;
        const double mag = std::max(std::abs(y[0]), std::abs(y[1]));
        if (mag > 1e200) {
            y[0] /= mag;
            y[1] /= mag;
        }
    }
    return nodes;
}

// March y across consecutive grid nodes from index i0 to i1, recording P.
void sweep_nodes(const ReducedEq& eq, State& y, int i0, int i1, const RadialGrid& grid,
                 std::vector<double>& P, double rtol) {
    auto stepper = controlled(rtol);
    const int dir = i1 >= i0 ? 1 : -1;
    P[i0] = y[0];
    for (int i = i0; i != i1; i += dir) {
        odeint::integrate_adaptive(stepper, eq, y, grid.at(i), grid.at(i + dir),
                                   dir * 0.5 * grid.dr());
        P[i + dir] = y[0];
    }
}

double turning_point(const RadialPotential& W, double E, double r_max) {
    // W strictly decreasing: solve W(r_t) = |E|
    double lo = r_max * 1e-6, hi = r_max;
    if (W(lo) < -E) return 0.05 * r_max;
    if (W(hi) > -E) return 0.6 * r_max;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (W(mid) > -E ? lo : hi) = mid;
    }
    return std::clamp(0.5 * (lo + hi), 0.05 * r_max, 0.6 * r_max);
}

}  // namespace

SchrodingerEigenpair schrodinger_eigen(const RadialPotential& W, double m, int node_count,
                                       const SchrodingerOptions& opt) {
    if (!(m > 0.0)) throw ConfigError("schrodinger_eigen: mass must be positive");
    if (node_count < 0) throw ConfigError("schrodinger_eigen: node_count must be >= 0");

    const double r_lo = 1e-8 * opt.r_max;
    auto nodes_at = [&](double E) {
        return outward_node_count(W, m, opt.dim, E, r_lo, opt.r_max, opt.rtol);
    };

    // Bracket the k-th level by the node count of the outward solution:
    // N(E) is nondecreasing and jumps from k to k+1 exactly at E_k of the
    // Dirichlet problem on [0, r_max], an exponentially small shift from
    // the half-line level.
    double E_hi = -1e-12 * m;
    if (nodes_at(E_hi) < node_count + 1)
        throw NoBoundStateError("schrodinger_eigen: potential too shallow for node_count " +
                                std::to_string(node_count));
    double E_lo = W.singular_at_origin() ? -2.0 * m * W.z * W.z - 1.0 : -2.0 * (W(0.0) + 1.0);
    for (int guard = 0; nodes_at(E_lo) > node_count; ++guard) {
        E_lo *= 2.0;
        if (guard > 60) throw Error("schrodinger_eigen: cannot bracket from below");
    }

    while (E_hi - E_lo > opt.bisect_tol * std::max(1.0, std::abs(E_lo))) {
        const double mid = 0.5 * (E_lo + E_hi);
        (nodes_at(mid) <= node_count ? E_lo : E_hi) = mid;
    }
    const double E = 0.5 * (E_lo + E_hi);

    // Eigenfunction: outward to the turning point, inward from r_max with a
    // decaying start, glued by matching P.
    RadialGrid grid{opt.r_max, opt.n_r};
    std::vector<double> P(grid.nodes(), 0.0);
    ReducedEq eq{&W, m, E, 0.25 * (opt.dim - 1) * (opt.dim - 3)};
    const int i_match =
        std::clamp(static_cast<int>(std::round(turning_point(W, E, opt.r_max) / grid.dr())), 2,
                   grid.n_r - 2);

    State y{r_lo, 1.0};
    {
        auto stepper = controlled(opt.rtol);
        odeint::integrate_adaptive(stepper, eq, y, r_lo, grid.at(1), 0.5 * grid.dr());
    }
    sweep_nodes(eq, y, 1, i_match, grid, P, opt.rtol);
    const double P_out_match = P[i_match];

    std::vector<double> Pin(grid.nodes(), 0.0);
    const double kappa = std::sqrt(2.0 * m * std::abs(E));
    State yi{1.0, -kappa};
    sweep_nodes(eq, yi, grid.n_r, i_match, grid, Pin, opt.rtol);
    const double scale = P_out_match / Pin[i_match];
    for (int i = i_match + 1; i <= grid.n_r; ++i) P[i] = scale * Pin[i];
    P[0] = 0.0;

    // phi = P / r^{(n-1)/2}; even extension at the origin.
    SchrodingerEigenpair out;
    out.grid = grid;
    out.mass = m;
    out.dim = opt.dim;
    out.E = E;
    out.phi.assign(grid.nodes(), 0.0);
    const double a_pow = 0.5 * (opt.dim - 1);
    for (int i = 1; i <= grid.n_r; ++i) out.phi[i] = P[i] / std::pow(grid.at(i), a_pow);
    out.phi[0] = (4.0 * out.phi[1] - out.phi[2]) / 3.0;

    double maxabs = 0.0;
    for (double p : out.phi) maxabs = std::max(maxabs, std::abs(p));
    int nodes = 0;
    double prev = 0.0;
    for (int i = 0; i <= grid.n_r; ++i) {
        const double v = out.phi[i];
        if (std::abs(v) < 1e-9 * maxabs) continue;
        if (prev != 0.0 && (v > 0) != (prev > 0)) ++nodes;
        prev = v;
    }
    out.node_count = nodes;
    if (nodes != node_count)
        throw NodeMismatchError("schrodinger_eigen: converged level has " + std::to_string(nodes) +
                                " nodes, wanted " + std::to_string(node_count));

    std::vector<double> w2(grid.nodes());
    for (int i = 0; i <= grid.n_r; ++i)
        w2[i] = out.phi[i] * out.phi[i] * std::pow(grid.at(i), opt.dim - 1.0);
    const double nrm = std::sqrt(integrate_uniform(w2, grid.dr()));
    const double sgn = out.phi[1] >= 0 ? 1.0 : -1.0;
    for (double& p : out.phi) p /= sgn * nrm;

    if (opt.enforce_boundary) {
        double maxn = 0.0;
        for (double p : out.phi) maxn = std::max(maxn, std::abs(p));
        if (std::abs(out.phi[grid.n_r]) > 1e-10 * maxn)
            throw Error("schrodinger_eigen: eigenfunction not decayed at r_max; enlarge the grid");
    }
    return out;
}

TuneResult tune_potential(double m, double tol, const SchrodingerOptions& opt) {
    if (!(m > 0.0)) throw ConfigError("tune_potential: mass must be positive");
    SchrodingerOptions sopt = opt;
    sopt.enforce_boundary = false;  // intermediate iterates may decay slowly

    auto levels = [&](double depth, double width) -> std::array<double, 2> {
        const RadialPotential W = RadialPotential::gaussian(depth, width);
        const double E0 = schrodinger_eigen(W, m, 0, sopt).E;
        const double E1 = schrodinger_eigen(W, m, 1, sopt).E;
        return {E0 + 1.0, E1 + 0.5};
    };

    // Seed from a coarse scan done once at m = 1, transported by the exact
    // scaling E(m, A, s) = E(1, A, sqrt(m) s).
    double A = 1.45039, sigma = 5.26715 / std::sqrt(m);
    std::array<double, 2> g{};
    try {
        g = levels(A, sigma);
    } catch (const NoBoundStateError&) {
        throw RootFindFailedError("tune_potential: seed potential lost its bound states");
    }

    int it = 0;
    for (; it < 40; ++it) {
        const double res = std::max(std::abs(g[0]), std::abs(g[1]));
        if (res <= tol) break;
        const double hA = 1e-6 * std::max(1.0, std::abs(A));
        const double hS = 1e-6 * std::max(1.0, std::abs(sigma));
        const auto gA = levels(A + hA, sigma);
        const auto gS = levels(A, sigma + hS);
        const double J00 = (gA[0] - g[0]) / hA, J01 = (gS[0] - g[0]) / hS;
        const double J10 = (gA[1] - g[1]) / hA, J11 = (gS[1] - g[1]) / hS;
        const double det = J00 * J11 - J01 * J10;
        if (std::abs(det) < 1e-300)
            throw RootFindFailedError("tune_potential: singular Jacobian; residuals " +
                                      std::to_string(g[0]) + ", " + std::to_string(g[1]));
        const double dA = (-g[0] * J11 + g[1] * J01) / det;
        const double dS = (-J00 * g[1] + J10 * g[0]) / det;
        double step = 1.0;
        bool accepted = false;
        for (int half = 0; half < 8; ++half, step *= 0.5) {
            const double An = A + step * dA, Sn = sigma + step * dS;
            if (!(An > 0.0) || !(Sn > 0.0)) continue;
            try {
                const auto gn = levels(An, Sn);
                if (std::max(std::abs(gn[0]), std::abs(gn[1])) < res) {
                    A = An;
                    sigma = Sn;
                    g = gn;
                    accepted = true;
                    break;
                }
            } catch (const NoBoundStateError&) {
                continue;  // stepped out of the two-level region, shrink
            }
        }
        if (!accepted)
            throw RootFindFailedError("tune_potential: stalled; residuals " +
                                      std::to_string(g[0]) + ", " + std::to_string(g[1]) +
                                      " at depth=" + std::to_string(A) +
                                      " width=" + std::to_string(sigma));
    }
    if (std::max(std::abs(g[0]), std::abs(g[1])) > tol)
        throw RootFindFailedError("tune_potential: no convergence; residuals " +
                                  std::to_string(g[0]) + ", " + std::to_string(g[1]));

    TuneResult out;
    out.W = RadialPotential::gaussian(A, sigma);
    out.E0 = g[0] - 1.0;
    out.E1 = g[1] - 0.5;
    out.newton_iterations = it;
    return out;
}

std::pair<std::vector<double>, std::vector<double>> nonrelativistic_seed(
    const SchrodingerEigenpair& phi, double m, double omega, const RadialGrid& out_grid) {
    if (!(omega > 0.0) || !(omega < m))
        throw ConfigError("nonrelativistic_seed: omega must lie in (0, m)");
    out_grid.validate();
    const double stretch = std::sqrt(m - omega);

    std::vector<double> knots(phi.grid.nodes());
    for (int i = 0; i < phi.grid.nodes(); ++i) knots[i] = phi.grid.at(i);
    // cubic resample; the seed only has to be close, it feeds an eigensolve
    MonotoneCubic spline = MonotoneCubic::build(knots, phi.phi);

    std::vector<double> v(out_grid.nodes()), u(out_grid.nodes(), 0.0);
    for (int i = 0; i < out_grid.nodes(); ++i) {
        const double arg = stretch * out_grid.at(i);
        v[i] = arg <= spline.x_max() ? spline(arg) : 0.0;
    }
    const double dr = out_grid.dr();
    for (int i = 1; i < out_grid.n_r; ++i) u[i] = -(v[i + 1] - v[i - 1]) / (2.0 * dr) / (2.0 * m);
    u[0] = 0.0;  // phi even and regular at the origin
    u[out_grid.n_r] = u[out_grid.n_r - 1];
    return {v, u};
}

}  // namespace cwave
