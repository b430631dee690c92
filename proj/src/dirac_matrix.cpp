#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cwave/dirac.hpp"

namespace cwave {

namespace {

// Symmetrized first-order system in the substitution (vt, ut) =
// r^{(n-1)/2} (v, u):
//     omega vt = (m - V) vt + ut' + (a/r) ut
//     omega ut = -vt' + (a/r) vt - (m - V) ut,     a = (n-1)/2.
// Central differences with Dirichlet ends give a symmetric banded matrix of
// bandwidth 3 in the interleaved ordering (vt_1, ut_1, vt_2, ...).
struct BandedDirac {
    int dim_matrix = 0;
    static constexpr int kd = 3;
    std::vector<double> ab;  // col-major banded lower storage, ldab = kd + 1

    double& entry(int row, int col) { return ab[(row - col) + col * (kd + 1)]; }
};

BandedDirac build_banded(const RadialPotential& V, double m, const RadialGrid& grid, int n_dim) {
    const int interior = grid.n_r - 1;
    const double dr = grid.dr();
    const double a = 0.5 * (n_dim - 1);
    BandedDirac bd;
    bd.dim_matrix = 2 * interior;
    bd.ab.assign(static_cast<size_t>(BandedDirac::kd + 1) * bd.dim_matrix, 0.0);

    for (int i = 1; i <= interior; ++i) {
        const double r = grid.at(i);
        const double mv = m - V(r);
        const int pv = 2 * (i - 1), pu = pv + 1;
        bd.entry(pv, pv) = mv;
        bd.entry(pu, pu) = -mv;
        bd.entry(pu, pv) = a / r;
        if (i < interior) {
            const int pv_next = pv + 2, pu_next = pu + 2;
            bd.entry(pu_next, pv) = 1.0 / (2.0 * dr);   // vt_i <- ut_{i+1}
            bd.entry(pv_next, pu) = -1.0 / (2.0 * dr);  // ut_i <- vt_{i+1}
        }
    }
    return bd;
}

struct RawMode {
    double omega;
    std::vector<double> z;  // eigenvector, interleaved
};

// Grid-scale (doubler) modes of the central-difference derivative alternate
// sign site to site; compare difference energy against sum energy on vt.
bool is_grid_scale(const std::vector<double>& z) {
    double diff2 = 0.0, sum2 = 0.0;
    for (size_t i = 0; i + 2 < z.size(); i += 2) {
        const double d = z[i + 2] - z[i], s = z[i + 2] + z[i];
        diff2 += d * d;
        sum2 += s * s;
    }
    return diff2 > sum2;
}

std::vector<RawMode> gap_modes(const RadialPotential& V, double m, const RadialGrid& grid,
                               double lo, double hi, int n_dim) {
    BandedDirac bd = build_banded(V, m, grid, n_dim);
    const int n = bd.dim_matrix;
    std::vector<double> w(n), q(1);
    std::vector<lapack_int> ifail(n);
    lapack_int found = 0;

    // eigenvalues in the requested window; AB is destroyed by the call
    lapack_int info = LAPACKE_dsbevx(
        LAPACK_COL_MAJOR, 'N', 'V', 'L', n, BandedDirac::kd, bd.ab.data(), BandedDirac::kd + 1,
        q.data(), 1, lo, hi, 0, 0, 1e-13, &found, w.data(), nullptr, n, ifail.data());
    if (info != 0) throw Error("dsbevx (values) failed, info = " + std::to_string(info));
    if (found == 0) return {};

    // eigenvectors by inverse iteration with the shifted banded LU
    std::vector<RawMode> modes;
    const int kl = BandedDirac::kd, ku = BandedDirac::kd;
    const int ldgb = 2 * kl + ku + 1;
    const BandedDirac fresh = build_banded(V, m, grid, n_dim);
    for (int e = 0; e < found; ++e) {
        const double shift = w[e] + 1e-11 * m;  // keep the LU nonsingular
        std::vector<double> gb(static_cast<size_t>(ldgb) * n, 0.0);
        for (int col = 0; col < n; ++col) {
            for (int off = 0; off <= kl; ++off) {
                const int row = col + off;
                if (row >= n) break;
                const double val = fresh.ab[off + col * (kl + 1)] - (off == 0 ? shift : 0.0);
                if (val == 0.0 && off != 0) continue;
                gb[kl + ku + (row - col) + col * ldgb] = val;                // lower part
                if (off != 0) gb[kl + ku + (col - row) + row * ldgb] = val;  // mirror
            }
        }
        std::vector<lapack_int> ipiv(n);
        info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kl, ku, gb.data(), ldgb, ipiv.data());
        if (info < 0) throw Error("dgbtrf failed, info = " + std::to_string(info));
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(1.0 + i);  // deterministic start
        for (int iter = 0; iter < 3; ++iter) {
            info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kl, ku, 1, gb.data(), ldgb,
                                  ipiv.data(), x.data(), n);
            if (info != 0) throw Error("dgbtrs failed, info = " + std::to_string(info));
            double nrm = 0.0;
            for (double t : x) nrm += t * t;
            nrm = std::sqrt(nrm);
            for (double& t : x) t /= nrm;
        }
        modes.push_back({w[e], std::move(x)});
    }
    return modes;
}

}  // namespace

std::vector<MatrixLevel> dirac_matrix_levels(const RadialPotential& V, double m,
                                             const RadialGrid& grid, double omega_lo,
                                             double omega_hi, int n_dim) {
    grid.validate();
    std::vector<MatrixLevel> out;
    const double a = 0.5 * (n_dim - 1);
    for (RawMode& mode : gap_modes(V, m, grid, omega_lo, omega_hi, n_dim)) {
        if (is_grid_scale(mode.z)) continue;
        // node count of v = vt / r^a on interior nodes
        std::vector<double> v((mode.z.size() + 1) / 2);
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = mode.z[2 * i] / std::pow(grid.at(static_cast<int>(i) + 1), a);
        double maxabs = 0.0;
        for (double x : v) maxabs = std::max(maxabs, std::abs(x));
        int nodes = 0;
        double prev = 0.0;
        for (double x : v) {
            if (std::abs(x) < 1e-6 * maxabs) continue;
            if (prev != 0.0 && (x > 0) != (prev > 0)) ++nodes;
            prev = x;
        }
        out.push_back({mode.omega, nodes});
    }
    std::sort(out.begin(), out.end(),
              [](const MatrixLevel& l, const MatrixLevel& r) { return l.omega < r.omega; });
    return out;
}

double dirac_matrix_level(const RadialPotential& V, double m, int node_count,
                          const RadialGrid& grid, int n_dim) {
    if (grid.n_r % 2 != 0) throw ConfigError("dirac_matrix_level: n_r must be even");
    const RadialGrid coarse{grid.r_max, grid.n_r / 2};
    const double lo = 1e-3 * m, hi = m * (1.0 - 1e-9);

    auto pick = [&](const std::vector<MatrixLevel>& levels) {
        for (const MatrixLevel& l : levels)
            if (l.node_count == node_count) return l.omega;
        throw NoEigenvalueError("dirac_matrix_level: no gap level with node_count " +
                                std::to_string(node_count));
    };
    const double w_h = pick(dirac_matrix_levels(V, m, grid, lo, hi, n_dim));
    const double w_2h = pick(dirac_matrix_levels(V, m, coarse, lo, hi, n_dim));
    return (4.0 * w_h - w_2h) / 3.0;  // central differences are O(dr^2)
}

}  // namespace cwave
