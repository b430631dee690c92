#include "cwave/soliton.hpp"

#include <algorithm>
#include <cmath>

namespace cwave {

NonlinearityTable::NonlinearityTable(MonotoneCubic f, double noise_floor)
    : f_(std::move(f)), noise_floor_(noise_floor) {
    check_invariants();
}

void NonlinearityTable::check_invariants() const {
    const auto& x = f_.knots();
    const auto& y = f_.values();
    if (x.size() < 2) throw NonMonotoneInputError("nonlinearity table: too few knots");
    if (x.front() != 0.0 || y.front() != 0.0)
        throw NonMonotoneInputError("nonlinearity table: must start at f(0) = 0");
    for (size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) throw NonMonotoneInputError("nonlinearity table: knots not increasing");
        if (!(y[i] > y[i - 1])) throw NonMonotoneInputError("nonlinearity table: values not increasing");
    }
}

double NonlinearityTable::eval(double tau, bool* used_extension) const {
    if (used_extension) *used_extension = tau > f_.x_max() || tau < 0.0;
    if (tau <= 0.0) return 0.0;
    return f_(tau);
}

std::vector<C4> MultiFrequencyWave::evaluate(double t) const {
    const Complex i(0.0, 1.0);
    const Complex e0 = std::exp(-i * omega0() * t), e1 = std::exp(-i * omega1() * t);
    std::vector<C4> psi(grid().nodes());
    for (int k = 0; k < grid().nodes(); ++k) {
        psi[k] = a0 * e0 * phi0.samples[k] + a1 * e1 * phi1.samples[k] +
                 b0 * std::conj(e0) * chi0.samples[k] + b1 * std::conj(e1) * chi1.samples[k];
    }
    return psi;
}

MultiFrequencyWave assemble_wave(const RadialEigenpair& ground, const RadialEigenpair& excited,
                                 const RadialPotential& V, double mass, Complex a0, Complex a1,
                                 Complex b0, Complex b1, const SpinorFrame& frame,
                                 const Eigen::Vector3d& direction) {
    if (!(ground.grid == excited.grid))
        throw GridMismatchError("assemble_wave: radial grids differ");
    if (!(0.0 < ground.omega && ground.omega < excited.omega && excited.omega < mass))
        throw ConfigError("assemble_wave: needs 0 < omega0 < omega1 < m");
    if (!(std::norm(a0) > std::norm(b0)))
        throw ConfigError("assemble_wave: needs |a0|^2 > |b0|^2");
    if (!frame.orthonormal()) throw ConfigError("assemble_wave: frame not orthonormal");

    MultiFrequencyWave w;
    w.mass = mass;
    w.a0 = a0;
    w.a1 = a1;
    w.b0 = b0;
    w.b1 = b1;
    w.pair0 = ground;
    w.pair1 = excited;
    w.frame = frame;
    w.direction = direction;
    w.V = V;
    w.phi0 = assemble_profile(SpinorKind::Phi, ground, frame.n0, direction);
    w.phi1 = assemble_profile(SpinorKind::Phi, excited, frame.n1, direction);
    w.chi0 = assemble_profile(SpinorKind::Chi, ground, frame.m0, direction);
    w.chi1 = assemble_profile(SpinorKind::Chi, excited, frame.m1, direction);
    return w;
}

std::vector<double> density_F(const MultiFrequencyWave& w) {
    const double c0 = std::norm(w.a0) - std::norm(w.b0);
    const double c1 = std::norm(w.a1) - std::norm(w.b1);
    const int n = w.grid().nodes();
    std::vector<double> F(n);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r0 = w.pair0.v[i] * w.pair0.v[i] - w.pair0.u[i] * w.pair0.u[i];
        const double r1 = w.pair1.v[i] * w.pair1.v[i] - w.pair1.u[i] * w.pair1.u[i];
        F[i] = c0 * r0 + c1 * r1;
        scale = std::max(scale, std::abs(c0 * r0) + std::abs(c1 * r1));
    }
    scale = std::max(scale, 1e-300);

    // direct psi* beta psi at three times must reproduce F identically
    const M4 beta = beta_matrix();
    for (double t : {0.0, 0.37, 1.1}) {
        const std::vector<C4> psi = w.evaluate(t);
        for (int i = 0; i < n; ++i) {
            const Complex direct = psi[i].dot(beta * psi[i]);
            if (std::abs(direct - F[i]) > 1e-12 * scale)
                throw Error("density_F: direct psi*beta psi deviates from the closed form");
        }
    }
    return F;
}

WaveValidation validate_wave(const MultiFrequencyWave& w) {
    WaveValidation rep;
    rep.amplitude_margin = std::norm(w.a0) > std::norm(w.b0);
    rep.v0_positive = true;
    rep.F_positive = true;
    rep.F_strictly_decreasing = true;

    const std::vector<double> F = density_F(w);
    double F_max = 0.0;
    for (double f : F) F_max = std::max(F_max, f);
    const double floor = 1e-12 * std::max(F_max, 1e-300);

    auto note = [&](int i) {
        if (rep.first_violation_r < 0) rep.first_violation_r = w.grid().at(i);
    };
    for (int i = 0; i < w.grid().nodes(); ++i) {
        if (w.pair0.v[i] <= 0.0) {
            rep.v0_positive = false;
            note(i);
        }
        if (F[i] <= 0.0) {
            rep.F_positive = false;
            note(i);
        }
        if (i + 1 < w.grid().nodes() && F[i] > floor && !(F[i + 1] < F[i])) {
            rep.F_strictly_decreasing = false;
            note(i);
        }
    }
    return rep;
}

nlohmann::json WaveValidation::to_json() const {
    return {{"F_positive", F_positive},
            {"F_strictly_decreasing", F_strictly_decreasing},
            {"v0_positive", v0_positive},
            {"amplitude_margin", amplitude_margin},
            {"first_violation_r", first_violation_r},
            {"pass", pass()}};
}

BetaOrthogonalityReport beta_orthogonality_report(const MultiFrequencyWave& w) {
    BetaOrthogonalityReport rep;
    const Spinor4Profile* prof[4] = {&w.phi0, &w.phi1, &w.chi0, &w.chi1};
    const int dim = w.pair0.dim;
    double norm_scale = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double val = std::abs(beta_product_integral(*prof[a], *prof[b], dim));
            rep.integrals[a][b] = val;
            if (a == b) norm_scale = std::max(norm_scale, std::abs(val));
        }
    }
    // profiles are unit-normalized in L^2(r^{n-1}dr); beta-norms can still
    // be small, so anchor the scale at the plain norm
    rep.norm_scale = std::max(norm_scale, 1.0);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b)
                rep.max_offdiag_integral = std::max(rep.max_offdiag_integral, rep.integrals[a][b]);
    return rep;
}

nlohmann::json BetaOrthogonalityReport::to_json() const {
    nlohmann::json m = nlohmann::json::array();
    const char* names[4] = {"phi0", "phi1", "chi0", "chi1"};
    for (int a = 0; a < 4; ++a) {
        nlohmann::json row;
        for (int b = 0; b < 4; ++b) row[names[b]] = integrals[a][b];
        m.push_back({{names[a], row}});
    }
    return {{"integrals", m},
            {"max_offdiag_integral", max_offdiag_integral},
            {"norm_scale", norm_scale},
            {"pass", pass()}};
}

NonlinearityTable build_nonlinearity(const std::vector<double>& F,
                                     const std::vector<double>& V_samples,
                                     const RadialGrid& grid) {
    if (F.size() != V_samples.size() || static_cast<int>(F.size()) != grid.nodes())
        throw ConfigError("build_nonlinearity: sample count mismatch");

    double F_max = 0.0;
    for (double f : F) F_max = std::max(F_max, f);
    if (!(F_max > 0.0)) throw NonMonotoneInputError("build_nonlinearity: F not positive");
    const double floor = 1e-12 * F_max;

    // F decreases along r; drop the underflowed tail, reverse to increasing
    int last = grid.n_r;
    while (last > 0 && F[last] <= floor) --last;
    if (last < 2) throw NonMonotoneInputError("build_nonlinearity: support above noise floor too small");

    std::vector<double> tau, val;
    tau.reserve(last + 2);
    val.reserve(last + 2);
    tau.push_back(0.0);
    val.push_back(0.0);
    for (int i = last; i >= 0; --i) {
        if (!(F[i] > tau.back()))
            throw NonMonotoneInputError("build_nonlinearity: F not strictly decreasing at r = " +
                                        std::to_string(grid.at(i)));
        if (!(V_samples[i] > val.back()))
            throw NonMonotoneInputError("build_nonlinearity: V not strictly decreasing at r = " +
                                        std::to_string(grid.at(i)));
        tau.push_back(F[i]);
        val.push_back(V_samples[i]);
    }
    return NonlinearityTable(MonotoneCubic::build(std::move(tau), std::move(val)), floor);
}

}  // namespace cwave
