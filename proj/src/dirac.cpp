#include "cwave/dirac.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>

namespace odeint = boost::numeric::odeint;

namespace cwave {

namespace {

using State = std::array<double, 2>;  // {v, u}

struct RadialDiracEq {
    const RadialPotential* V;
    double m, omega;
    int dim;

    void operator()(const State& y, State& dy, double r) const {
        const double mv = m - (*V)(r);
        dy[0] = -(omega + mv) * y[1];
        dy[1] = (omega - mv) * y[0] - (dim - 1) * y[1] / r;
    }
};

auto controlled(double rtol) {
    return odeint::make_controlled(1e-280, rtol, odeint::runge_kutta_dopri5<State>());
}

struct BranchEnds {
    State out;  // at r_match, from the regular branch
    State in;   // at r_match, from the decaying branch
};

BranchEnds integrate_branches(const RadialPotential& V, double m, double omega, int dim,
                              double r_match, double r_max, double rtol) {
    RadialDiracEq eq{&V, m, omega, dim};
    BranchEnds ends;

    // regular branch: v ~ 1, u ~ c r with c = (omega - m + V(0)) / n
    const double r0 = 1e-8 * r_match;
    const double c = (omega - m + V(0.0)) / dim;
    State y{1.0, c * r0};
    auto st = controlled(rtol);
    odeint::integrate_adaptive(st, eq, y, r0, r_match, 0.01 * r_match);
    ends.out = y;

    // decaying branch: v ~ e^{-gamma r}, u = gamma/(omega+m) v
    const double gamma = std::sqrt(m * m - omega * omega);
    State z{1.0, gamma / (omega + m)};
    auto st2 = controlled(rtol);
    odeint::integrate_adaptive(st2, eq, z, r_max, r_match, -0.01 * r_match);
    ends.in = z;
    return ends;
}

double miss_function(const RadialPotential& V, double m, double omega, int dim, double r_match,
                     double r_max, double rtol) {
    const BranchEnds e = integrate_branches(V, m, omega, dim, r_match, r_max, rtol);
    const double no = std::hypot(e.out[0], e.out[1]);
    const double ni = std::hypot(e.in[0], e.in[1]);
    return (e.out[0] * e.in[1] - e.out[1] * e.in[0]) / (no * ni);
}

void sweep_dirac(const RadialDiracEq& eq, State& y, int i0, int i1, const RadialGrid& grid,
                 std::vector<double>& v, std::vector<double>& u, double rtol) {
    auto st = controlled(rtol);
    const int dir = i1 >= i0 ? 1 : -1;
    v[i0] = y[0];
    u[i0] = y[1];
    for (int i = i0; i != i1; i += dir) {
        odeint::integrate_adaptive(st, eq, y, grid.at(i), grid.at(i + dir), dir * 0.5 * grid.dr());
        v[i + dir] = y[0];
        u[i + dir] = y[1];
    }
}

int count_nodes(const std::vector<double>& v) {
    double maxabs = 0.0;
    for (double x : v) maxabs = std::max(maxabs, std::abs(x));
    int nodes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) < 1e-9 * maxabs) continue;
        if (prev != 0.0 && (x > 0) != (prev > 0)) ++nodes;
        prev = x;
    }
    return nodes;
}

RadialEigenpair assemble_eigenpair(const RadialPotential& V, double m, double omega, int dim,
                                   double r_match, const RadialGrid& grid, double rtol) {
    RadialDiracEq eq{&V, m, omega, dim};
    RadialEigenpair pair;
    pair.omega = omega;
    pair.grid = grid;
    pair.mass = m;
    pair.dim = dim;
    pair.v.assign(grid.nodes(), 0.0);
    pair.u.assign(grid.nodes(), 0.0);

    const int i_match = std::clamp(static_cast<int>(std::round(r_match / grid.dr())), 2,
                                   grid.n_r - 2);
    const double r0 = 1e-8 * grid.r_max;
    const double c = (omega - m + V(0.0)) / dim;
    State y{1.0, c * r0};
    {
        auto st = controlled(rtol);
        odeint::integrate_adaptive(st, eq, y, r0, grid.at(1), 0.5 * grid.dr());
    }
    sweep_dirac(eq, y, 1, i_match, grid, pair.v, pair.u, rtol);
    pair.v[0] = 1.0;  // regular branch start values
    pair.u[0] = 0.0;

    std::vector<double> vin(grid.nodes(), 0.0), uin(grid.nodes(), 0.0);
    const double gamma = std::sqrt(m * m - omega * omega);
    State z{1.0, gamma / (omega + m)};
    sweep_dirac(eq, z, grid.n_r, i_match, grid, vin, uin, rtol);

    // glue on v; at an eigenvalue u then matches to solver accuracy
    const double scale = pair.v[i_match] / vin[i_match];
    for (int i = i_match + 1; i <= grid.n_r; ++i) {
        pair.v[i] = scale * vin[i];
        pair.u[i] = scale * uin[i];
    }

    pair.node_count = count_nodes(pair.v);

    std::vector<double> w2(grid.nodes());
    for (int i = 0; i <= grid.n_r; ++i)
        w2[i] = (pair.v[i] * pair.v[i] + pair.u[i] * pair.u[i]) *
                std::pow(grid.at(i), dim - 1.0);
    const double nrm = std::sqrt(integrate_uniform(w2, grid.dr()));
    const double sgn = pair.v[0] >= 0 ? 1.0 : -1.0;
    for (double& x : pair.v) x /= sgn * nrm;
    for (double& x : pair.u) x /= sgn * nrm;

    pair.residual = dirac_eigen_residual(pair, V).sup;
    return pair;
}

}  // namespace

EigenResidual dirac_eigen_residual(const RadialEigenpair& pair, const RadialPotential& V) {
    const RadialGrid& grid = pair.grid;
    const double dr = grid.dr();
    const int n = pair.dim;
    EigenResidual res;
    double amp = 0.0, vmax = 0.0;
    for (int i = 0; i <= grid.n_r; ++i) {
        amp = std::max(amp, std::abs(pair.v[i]) + std::abs(pair.u[i]));
        vmax = std::max(vmax, V(grid.at(i)));
    }
    for (int i = 1; i < grid.n_r; ++i) {
        const double r = grid.at(i);
        const double mv = pair.mass - V(r);
        const double rhs_v = mv * pair.v[i] + (pair.u[i + 1] - pair.u[i - 1]) / (2 * dr) +
                             (n - 1) * pair.u[i] / r;
        const double rhs_u = -(pair.v[i + 1] - pair.v[i - 1]) / (2 * dr) - mv * pair.u[i];
        res.sup = std::max(res.sup, std::abs(rhs_v - pair.omega * pair.v[i]));
        res.sup = std::max(res.sup, std::abs(rhs_u - pair.omega * pair.u[i]));
    }
    const double freq = pair.mass + vmax + std::abs(pair.omega);
    res.scale = freq * freq * freq * amp;
    return res;
}

RadialEigenpair dirac_eigen(const RadialPotential& V, double m, double omega_guess,
                            int node_count, const RadialGrid& grid, const DiracOptions& opt) {
    grid.validate();
    if (!(m > 0.0)) throw ConfigError("dirac_eigen: mass must be positive");
    if (!(omega_guess > 0.0) || !(omega_guess < m))
        throw ConfigError("dirac_eigen: omega_guess must lie in (0, m)");

    const double lo_abs = 1e-6 * m, hi_abs = m * (1.0 - 1e-6);
    double lo = std::max(lo_abs, 0.9 * omega_guess);
    double hi = std::min(hi_abs, 1.1 * omega_guess);

    bool saw_sign_change = false;
    for (int widen = 0; widen <= opt.max_widenings; ++widen) {
        const double gamma_mid = std::sqrt(m * m - omega_guess * omega_guess);
        const double r_match = std::min(6.0 / gamma_mid, 0.6 * grid.r_max);
        auto miss = [&](double w) {
            return miss_function(V, m, w, opt.dim, r_match, grid.r_max, opt.rtol);
        };

        std::vector<double> roots;
        double prev_w = lo, prev_f = miss(lo);
        for (int k = 1; k <= opt.scan_points; ++k) {
            const double w = lo + (hi - lo) * k / opt.scan_points;
            const double f = miss(w);
            if (std::isfinite(prev_f) && std::isfinite(f) && (prev_f > 0) != (f > 0)) {
                saw_sign_change = true;
                auto tol = [&](double a, double b) {
                    return b - a < opt.omega_tol * m;
                };
                boost::uintmax_t iters = 80;
                auto br = boost::math::tools::toms748_solve(miss, prev_w, w, prev_f, f, tol,
                                                            iters);
                roots.push_back(0.5 * (br.first + br.second));
            }
            prev_w = w;
            prev_f = f;
        }

        RadialEigenpair best;
        bool found = false;
        for (double w : roots) {
            RadialEigenpair cand = assemble_eigenpair(V, m, w, opt.dim, r_match, grid, opt.rtol);
            if (cand.node_count != node_count) continue;
            if (!found || std::abs(cand.omega - omega_guess) < std::abs(best.omega - omega_guess)) {
                best = std::move(cand);
                found = true;
            }
        }
        if (found) return best;

        if (lo <= lo_abs && hi >= hi_abs) break;  // full gap already scanned
        const double width = hi - lo;
        lo = std::max(lo_abs, lo - 0.75 * width);
        hi = std::min(hi_abs, hi + 0.75 * width);
    }
    if (saw_sign_change)
        throw NodeMismatchError("dirac_eigen: eigenvalues found but none with node_count " +
                                std::to_string(node_count));
    throw NoEigenvalueError("dirac_eigen: no sign change of the miss function in (0, m)");
}

RhoMonotoneReport check_rho_monotone(const RadialEigenpair& ground) {
    RhoMonotoneReport rep;
    rep.v_positive = true;
    rep.rho_strictly_decreasing = true;
    std::vector<double> rho(ground.v.size());
    double rho_max = 0.0;
    for (size_t i = 0; i < rho.size(); ++i) {
        rho[i] = ground.v[i] * ground.v[i] - ground.u[i] * ground.u[i];
        rho_max = std::max(rho_max, rho[i]);
    }
    if (!(rho_max > 0.0)) {
        rep.rho_strictly_decreasing = false;  // rho never rises above zero
        rep.first_violation_r = 0.0;
    }
    const double floor = 1e-12 * rho_max;
    for (size_t i = 0; i < rho.size(); ++i) {
        if (ground.v[i] <= 0.0) {
            rep.v_positive = false;
            if (rep.first_violation_r < 0) rep.first_violation_r = ground.grid.at(static_cast<int>(i));
        }
        if (i + 1 < rho.size() && rho[i] > floor && !(rho[i + 1] < rho[i])) {
            rep.rho_strictly_decreasing = false;
            if (rep.first_violation_r < 0) rep.first_violation_r = ground.grid.at(static_cast<int>(i));
        }
    }
    return rep;
}

}  // namespace cwave
