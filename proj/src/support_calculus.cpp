#include "cwave/support_calculus.hpp"

#include <algorithm>
#include <cmath>

namespace cwave {

EdgeFunction lower_envelope(const EdgeFunction& mu) {
    EdgeFunction out(mu.x);
    const int n = mu.size();
    for (int i = 0; i < n; ++i) {
        double m = mu[i];
        if (i > 0) m = std::min(m, mu[i - 1]);
        if (i + 1 < n) m = std::min(m, mu[i + 1]);
        out[i] = m;
    }
    return out;
}

EdgeFunction upper_envelope(const EdgeFunction& mu) {
    EdgeFunction out(mu.x);
    const int n = mu.size();
    for (int i = 0; i < n; ++i) {
        double m = mu[i];
        if (i > 0) m = std::max(m, mu[i - 1]);
        if (i + 1 < n) m = std::max(m, mu[i + 1]);
        out[i] = m;
    }
    return out;
}

EdgeFunction stencil_oscillation(const EdgeFunction& mu) {
    EdgeFunction lo = lower_envelope(mu);
    EdgeFunction hi = upper_envelope(mu);
    EdgeFunction out(mu.x);
    for (int i = 0; i < mu.size(); ++i) {
        out[i] = (lo[i] == hi[i]) ? 0.0 : hi[i] - lo[i];
    }
    return out;
}

int GriddedDistribution::first_support_index(int ix) const {
    for (int k = 0; k < grid.omega.n; ++k)
        if (above_threshold(ix, k)) return k;
    return -1;
}

int GriddedDistribution::last_support_index(int ix) const {
    for (int k = grid.omega.n - 1; k >= 0; --k)
        if (above_threshold(ix, k)) return k;
    return -1;
}

double GriddedDistribution::max_abs() const {
    double m = 0.0;
    for (const Complex& v : values) m = std::max(m, std::abs(v));
    return m;
}

std::pair<EdgeFunction, EdgeFunction> support_edges(const GriddedDistribution& f) {
    EdgeFunction a(f.grid.x, kPlusInf);
    EdgeFunction b(f.grid.x, kMinusInf);
    for (int i = 0; i < f.grid.x.n; ++i) {
        const int lo = f.first_support_index(i);
        if (lo < 0) continue;
        a[i] = f.grid.omega.at(lo);
        b[i] = f.grid.omega.at(f.last_support_index(i));
    }
    return {a, b};
}

std::vector<int> sigma(const GriddedDistribution& f) {
    std::vector<int> idx;
    for (int i = 0; i < f.grid.x.n; ++i)
        if (f.first_support_index(i) >= 0) idx.push_back(i);
    return idx;
}

GriddedDistribution partial_convolution(const GriddedDistribution& f,
                                        const GriddedDistribution& g) {
    if (!(f.grid == g.grid)) throw GridMismatchError("partial_convolution: grids differ");
    const int nw = f.grid.omega.n;
    Grid2 out_grid;
    out_grid.x = f.grid.x;
    out_grid.omega = Axis{2.0 * f.grid.omega.min, 2.0 * f.grid.omega.max, 2 * nw - 1};

    GriddedDistribution h(out_grid, 0.0);
    const double dw = f.grid.omega.step();
    for (int i = 0; i < f.grid.x.n; ++i) {
        for (int p = 0; p < nw; ++p) {
            const Complex fp = f.at(i, p);
            if (fp == Complex(0.0, 0.0)) continue;
            for (int q = 0; q < nw; ++q) {
                h.at(i, p + q) += fp * g.at(i, q);
            }
        }
        for (int j = 0; j < 2 * nw - 1; ++j) h.at(i, j) *= dw;
    }
    return h;
}

GriddedDistribution sharp(const GriddedDistribution& f) {
    const Axis& w = f.grid.omega;
    if (std::abs(w.min + w.max) > 1e-12 * std::max(std::abs(w.min), std::abs(w.max)))
        throw ConfigError("sharp: omega axis must be symmetric about 0");
    GriddedDistribution out(f.grid, f.support_threshold);
    for (int i = 0; i < f.grid.x.n; ++i)
        for (int k = 0; k < w.n; ++k)
            out.at(i, k) = std::conj(f.at(i, w.n - 1 - k));
    return out;
}

TitchmarshReport check_titchmarsh_partial(const GriddedDistribution& f,
                                          const GriddedDistribution& g) {
    if (!(f.grid == g.grid)) throw GridMismatchError("check_titchmarsh_partial: grids differ");
    const GriddedDistribution h = partial_convolution(f, g);

    TitchmarshReport rep;
    auto [af, bf] = support_edges(f);
    auto [ag, bg] = support_edges(g);
    auto [ah, bh] = support_edges(h);
    rep.a_f = af.value;
    rep.b_f = bf.value;
    rep.a_g = ag.value;
    rep.b_g = bg.value;
    rep.a_conv = ah.value;
    rep.b_conv = bh.value;

    // Columnwise: inf/sup support indices add exactly (Titchmarsh per column).
    const int nx = f.grid.x.n;
    for (int i = 0; i < nx; ++i) {
        const int pf = f.first_support_index(i), pg = g.first_support_index(i);
        const int ph = h.first_support_index(i);
        if (pf < 0 || pg < 0) continue;  // empty column: conv column empty too
        rep.max_index_discrepancy_a =
            std::max(rep.max_index_discrepancy_a, std::abs(ph - (pf + pg)));
        const int qf = f.last_support_index(i), qg = g.last_support_index(i);
        const int qh = h.last_support_index(i);
        rep.max_index_discrepancy_b =
            std::max(rep.max_index_discrepancy_b, std::abs(qh - (qf + qg)));
    }

    // Envelope level (Theorem on partial convolutions): a^U additivity up to
    // one stencil oscillation of each factor; mirror statement for b^L.
    EdgeFunction afU = upper_envelope(af), agU = upper_envelope(ag), ahU = upper_envelope(ah);
    EdgeFunction bfL = lower_envelope(bf), bgL = lower_envelope(bg), bhL = lower_envelope(bh);
    EdgeFunction oa_f = stencil_oscillation(af), oa_g = stencil_oscillation(ag);
    EdgeFunction ob_f = stencil_oscillation(bf), ob_g = stencil_oscillation(bg);

    rep.a_env_conv = ahU.value;
    rep.b_env_conv = bhL.value;
    rep.a_env_sum.assign(nx, kPlusInf);
    rep.b_env_sum.assign(nx, kMinusInf);
    rep.env_bound_a.assign(nx, 0.0);
    rep.env_bound_b.assign(nx, 0.0);

    bool env_ok = true;
    for (int i = 0; i < nx; ++i) {
        const double sum_a = afU[i] + agU[i];
        const double sum_b = bfL[i] + bgL[i];
        rep.a_env_sum[i] = sum_a;
        rep.b_env_sum[i] = sum_b;
        if (!std::isfinite(ahU[i]) || !std::isfinite(sum_a)) continue;
        const double bound_a = oa_f[i] + oa_g[i];
        const double bound_b = ob_f[i] + ob_g[i];
        rep.env_bound_a[i] = bound_a;
        rep.env_bound_b[i] = bound_b;
        const double da = std::abs(ahU[i] - sum_a);
        const double db = std::abs(bhL[i] - sum_b);
        rep.max_env_discrepancy_a = std::max(rep.max_env_discrepancy_a, da);
        rep.max_env_discrepancy_b = std::max(rep.max_env_discrepancy_b, db);
        const double dw = f.grid.omega.step();
        rep.max_env_excess_a = std::max(rep.max_env_excess_a, da - bound_a);
        rep.max_env_excess_b = std::max(rep.max_env_excess_b, db - bound_b);
        // one d_omega of slack absorbs node rounding of the doubled axis
        if (da > bound_a + 1e-9 * dw || db > bound_b + 1e-9 * dw) env_ok = false;
    }

    rep.columnwise_exact =
        rep.max_index_discrepancy_a == 0 && rep.max_index_discrepancy_b == 0;
    rep.envelope_within_bound = env_ok;
    rep.pass = rep.columnwise_exact && rep.envelope_within_bound;
    return rep;
}

namespace {
nlohmann::json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "+inf" : "-inf";
}

nlohmann::json edge_array(const std::vector<double>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : v) arr.push_back(finite_or_string(x));
    return arr;
}
}  // namespace

nlohmann::json TitchmarshReport::to_json() const {
    nlohmann::json j;
    j["columns"] = {
        {"a_f", edge_array(a_f)},         {"b_f", edge_array(b_f)},
        {"a_g", edge_array(a_g)},         {"b_g", edge_array(b_g)},
        {"a_conv", edge_array(a_conv)},   {"b_conv", edge_array(b_conv)},
        {"a_env_conv", edge_array(a_env_conv)}, {"a_env_sum", edge_array(a_env_sum)},
        {"b_env_conv", edge_array(b_env_conv)}, {"b_env_sum", edge_array(b_env_sum)},
        {"env_bound_a", edge_array(env_bound_a)}, {"env_bound_b", edge_array(env_bound_b)},
    };
    j["max_index_discrepancy_a"] = max_index_discrepancy_a;
    j["max_index_discrepancy_b"] = max_index_discrepancy_b;
    j["max_env_discrepancy_a"] = max_env_discrepancy_a;
    j["max_env_discrepancy_b"] = max_env_discrepancy_b;
    j["max_env_excess_a"] = max_env_excess_a;
    j["max_env_excess_b"] = max_env_excess_b;
    j["columnwise_exact"] = columnwise_exact;
    j["envelope_within_bound"] = envelope_within_bound;
    j["pass"] = pass;
    return j;
}

}  // namespace cwave
