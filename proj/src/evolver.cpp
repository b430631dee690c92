#include "cwave/evolver.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>

namespace cwave {

double AlphaSpec::operator()(double tau) const {
    if (kind == Kind::Poly) return poly(tau);
    return table.eval(tau);
}

double AlphaSpec::antiderivative(double tau) const {
    if (kind == Kind::Poly) {
        double acc = 0.0;
        const auto& c = poly.coeffs();
        for (size_t j = 0; j < c.size(); ++j)
            acc += c[j] * std::pow(tau, static_cast<double>(j) + 1.0) / (j + 1.0);
        return acc;
    }
    return table.interp().integral_to(tau);
}

double Trajectory1D::snapshot_dt() const {
    if (times.size() < 2) throw ConfigError("trajectory has fewer than 2 snapshots");
    return times[1] - times[0];
}

namespace {

/// In-place complex FFT pair on a fixed size; plans use FFTW_ESTIMATE so
/// identical inputs give identical outputs run to run.
class Fft1D {
  public:
    explicit Fft1D(int n) : n_(n), buf_(n) {
        fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_.data()),
                                reinterpret_cast<fftw_complex*>(buf_.data()), FFTW_FORWARD,
                                FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_.data()),
                                reinterpret_cast<fftw_complex*>(buf_.data()), FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    ~Fft1D() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    void forward(std::vector<Complex>& data) {
        buf_ = data;
        fftw_execute(fwd_);
        data = buf_;
    }
    void backward(std::vector<Complex>& data) {  // normalized inverse
        buf_ = data;
        fftw_execute(bwd_);
        for (int i = 0; i < n_; ++i) data[i] = buf_[i] / static_cast<double>(n_);
    }

  private:
    int n_;
    std::vector<Complex> buf_;
    fftw_plan fwd_, bwd_;
};

std::vector<double> wavenumbers(int n, double L) {
    std::vector<double> k(n);
    const double base = M_PI / L;  // box length 2L
    for (int j = 0; j < n; ++j) k[j] = base * (j <= n / 2 ? j : j - n);
    return k;
}

void check_blowup(const std::vector<Complex>& u, double guard, double t) {
    for (const Complex& z : u)
        if (!(std::abs(z) <= guard))
            throw BlowUpError("field exceeded the blow-up guard at t = " + std::to_string(t));
}

}  // namespace

double nls_mass(const std::vector<Complex>& u, double dx) {
    double acc = 0.0;
    for (const Complex& z : u) acc += std::norm(z);
    return acc * dx;
}

double nlkg_energy(const std::vector<Complex>& u, const std::vector<Complex>& v, double L,
                   double mass, const AlphaSpec& alpha) {
    const int n = static_cast<int>(u.size());
    const double dx = 2.0 * L / n;
    Fft1D fft(n);
    std::vector<Complex> du = u;
    fft.forward(du);
    const std::vector<double> k = wavenumbers(n, L);
    for (int j = 0; j < n; ++j) du[j] *= Complex(0.0, k[j]);
    fft.backward(du);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double tau = std::norm(u[i]);
        acc += 0.5 * std::norm(v[i]) + 0.5 * std::norm(du[i]) + 0.5 * mass * mass * tau +
               0.5 * alpha.antiderivative(tau);
    }
    return acc * dx;
}

Trajectory1D evolve_nls(const std::vector<Complex>& u0, double L, const AlphaSpec& alpha,
                        const EvolveOptions& opt) {
    const int n = static_cast<int>(u0.size());
    if (n < 2 || !(L > 0.0)) throw ConfigError("evolve_nls: bad grid");
    if (!(opt.dt > 0.0) || opt.steps < 1 || opt.stride < 1)
        throw ConfigError("evolve_nls: bad time stepping");

    Trajectory1D traj;
    traj.L = L;
    traj.n_x = n;
    traj.dt = opt.dt;
    traj.stride = opt.stride;

    Fft1D fft(n);
    const std::vector<double> k = wavenumbers(n, L);
    std::vector<Complex> lin(n);
    for (int j = 0; j < n; ++j) lin[j] = std::polar(1.0, -k[j] * k[j] * opt.dt);

    std::vector<Complex> u = u0;
    const double mass0 = nls_mass(u, traj.dx());
    auto snapshot = [&](int step) {
        traj.times.push_back(step * opt.dt);
        traj.snaps.push_back(u);
        if (mass0 > 0.0)
            traj.max_mass_drift = std::max(traj.max_mass_drift,
                                           std::abs(nls_mass(u, traj.dx()) - mass0) / mass0);
    };
    snapshot(0);

    auto half_kick = [&]() {
        for (Complex& z : u) z *= std::polar(1.0, -alpha(std::norm(z)) * 0.5 * opt.dt);
    };
    for (int step = 1; step <= opt.steps; ++step) {
        half_kick();
        fft.forward(u);
        for (int j = 0; j < n; ++j) u[j] *= lin[j];
        fft.backward(u);
        half_kick();
        check_blowup(u, opt.blowup_guard, step * opt.dt);
        if (step % opt.stride == 0) snapshot(step);
    }
    return traj;
}

Trajectory1D evolve_nlkg(const std::vector<Complex>& u0, const std::vector<Complex>& v0,
                         double L, double mass, const AlphaSpec& alpha,
                         const EvolveOptions& opt) {
    const int n = static_cast<int>(u0.size());
    if (n < 2 || !(L > 0.0)) throw ConfigError("evolve_nlkg: bad grid");
    if (u0.size() != v0.size()) throw ConfigError("evolve_nlkg: u0 and v0 sizes differ");
    if (!(mass > 0.0)) throw ConfigError("evolve_nlkg: mass must be positive");
    const double dx = 2.0 * L / n;
    if (!(opt.dt <= opt.cfl_factor * dx))
        throw ConfigError("evolve_nlkg: dt exceeds the accuracy guard cfl_factor * dx");

    Trajectory1D traj;
    traj.L = L;
    traj.n_x = n;
    traj.dt = opt.dt;
    traj.stride = opt.stride;
    traj.has_velocity = true;

    Fft1D fft(n);
    const std::vector<double> k = wavenumbers(n, L);
    std::vector<double> c(n), s_over(n), s_times(n);
    for (int j = 0; j < n; ++j) {
        const double Om = std::sqrt(k[j] * k[j] + mass * mass);
        c[j] = std::cos(Om * opt.dt);
        s_over[j] = std::sin(Om * opt.dt) / Om;
        s_times[j] = std::sin(Om * opt.dt) * Om;
    }

    std::vector<Complex> u = u0, v = v0;
    const double E0 = nlkg_energy(u, v, L, mass, alpha);
    const double E_scale = std::max(std::abs(E0), 1e-300);
    auto snapshot = [&](int step) {
        traj.times.push_back(step * opt.dt);
        traj.snaps.push_back(u);
        traj.velocity_snaps.push_back(v);
        traj.max_energy_drift =
            std::max(traj.max_energy_drift,
                     std::abs(nlkg_energy(u, v, L, mass, alpha) - E0) / E_scale);
    };
    snapshot(0);

    auto half_kick = [&]() {
        for (int i = 0; i < n; ++i) v[i] -= alpha(std::norm(u[i])) * u[i] * (0.5 * opt.dt);
    };
    for (int step = 1; step <= opt.steps; ++step) {
        half_kick();
        fft.forward(u);
        fft.forward(v);
        for (int j = 0; j < n; ++j) {
            const Complex uj = u[j], vj = v[j];
            u[j] = c[j] * uj + s_over[j] * vj;
            v[j] = -s_times[j] * uj + c[j] * vj;
        }
        fft.backward(u);
        fft.backward(v);
        half_kick();
        check_blowup(u, opt.blowup_guard, step * opt.dt);
        if (step % opt.stride == 0) snapshot(step);
    }
    return traj;
}

std::pair<SpectrumProbe, GriddedDistribution> time_spectrum(const Trajectory1D& traj,
                                                            const SpectrumRequest& req) {
    const int total = traj.snapshot_count();
    const int N = req.window_snapshots > 0 ? req.window_snapshots : total;
    if (N < 16) throw ConfigError("time_spectrum: fewer than 16 snapshots");
    if (N > total) throw ConfigError("time_spectrum: window longer than the trajectory");
    req.probes.validate("probes");

    const int k0 = total - N;  // last N snapshots
    const double dts = traj.snapshot_dt();
    const int lmax = (N % 2 == 0) ? N / 2 - 1 : (N - 1) / 2;
    Axis omega{-2.0 * M_PI * lmax / (N * dts), 2.0 * M_PI * lmax / (N * dts), 2 * lmax + 1};

    if (req.window != "hann" && req.window != "rect")
        throw ConfigError("time_spectrum: unknown window '" + req.window + "'");
    const bool use_hann = req.window == "hann";

    SpectrumProbe probe;
    probe.probes = req.probes;
    probe.omega = omega;
    probe.window = req.window;
    probe.values.assign(req.probes.n, std::vector<Complex>(omega.n));

    double parseval_worst = 0.0;
    for (int p = 0; p < req.probes.n; ++p) {
        const double xp = req.probes.at(p);
        int ix = static_cast<int>(std::lround((xp + traj.L) / traj.dx()));
        ix = ((ix % traj.n_x) + traj.n_x) % traj.n_x;  // periodic wrap
        std::vector<Complex> series(N);
        for (int k = 0; k < N; ++k) series[k] = traj.snaps[k0 + k][ix];

        // Parseval on the plain (unwindowed) DFT with all N bins
        double sum_t = 0.0;
        for (const Complex& z : series) sum_t += std::norm(z);
        if (sum_t > 0.0) {
            double sum_w = 0.0;
            for (int l = 0; l < N; ++l) {
                Complex acc(0.0, 0.0);
                for (int k = 0; k < N; ++k)
                    acc += series[k] * std::polar(1.0, 2.0 * M_PI * l * k / N);
                sum_w += std::norm(acc);
            }
            parseval_worst =
                std::max(parseval_worst, std::abs(sum_w / N - sum_t) / sum_t);
        }

        for (int l = 0; l < omega.n; ++l) {
            const double w = omega.at(l);
            Complex acc(0.0, 0.0);
            for (int k = 0; k < N; ++k) {
                const double win =
                    use_hann ? 0.5 * (1.0 - std::cos(2.0 * M_PI * k / N)) : 1.0;
                acc += win * series[k] * std::polar(1.0, w * traj.times[k0 + k]);
            }
            probe.values[p][l] = acc * dts;
        }
    }
    probe.parseval_rel_error = parseval_worst;

    GriddedDistribution gd(Grid2{req.probes, omega}, 0.0);
    double max_abs = 0.0;
    for (int p = 0; p < req.probes.n; ++p)
        for (int l = 0; l < omega.n; ++l) {
            gd.at(p, l) = probe.values[p][l];
            max_abs = std::max(max_abs, std::abs(probe.values[p][l]));
        }
    gd.support_threshold = req.relative_threshold * max_abs;
    return {probe, gd};
}

std::vector<double> modulus_variance(const Trajectory1D& traj) {
    const int n = traj.n_x;
    const int N = traj.snapshot_count();
    if (N < 1) throw ConfigError("modulus_variance: empty trajectory");
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double mean = 0.0;
        for (int k = 0; k < N; ++k) mean += std::norm(traj.snaps[k][i]);
        mean /= N;
        if (mean == 0.0) continue;
        double var = 0.0;
        for (int k = 0; k < N; ++k) {
            const double d = std::norm(traj.snaps[k][i]) - mean;
            var += d * d;
        }
        out[i] = var / N / (mean * mean);
    }
    return out;
}

DiracResidualReport dirac_residual(const MultiFrequencyWave& w, const NonlinearityTable& f,
                                   const std::vector<double>& times) {
    const RadialGrid& grid = w.grid();
    const int nn = grid.nodes();
    const int dim = w.pair0.dim;
    const double dr = grid.dr();
    const Complex I(0.0, 1.0);

    const RadialPotential zero = RadialPotential::gaussian(0.0, 1.0);
    const Spinor4Profile Dm_phi0 = apply_dirac_minus_beta_v(w.phi0, zero, w.mass, dim);
    const Spinor4Profile Dm_phi1 = apply_dirac_minus_beta_v(w.phi1, zero, w.mass, dim);
    const Spinor4Profile Dm_chi0 = apply_dirac_minus_beta_v(w.chi0, zero, w.mass, dim);
    const Spinor4Profile Dm_chi1 = apply_dirac_minus_beta_v(w.chi1, zero, w.mass, dim);
    const Spinor4Profile Hv_phi0 = apply_dirac_minus_beta_v(w.phi0, w.V, w.mass, dim);
    const Spinor4Profile Hv_phi1 = apply_dirac_minus_beta_v(w.phi1, w.V, w.mass, dim);
    const Spinor4Profile Hv_chi0 = apply_dirac_minus_beta_v(w.chi0, w.V, w.mass, dim);
    const Spinor4Profile Hv_chi1 = apply_dirac_minus_beta_v(w.chi1, w.V, w.mass, dim);

    const std::vector<double> F = density_F(w);
    const M4 beta = beta_matrix();

    DiracResidualReport rep;
    rep.times = times;

    auto weight = [&](int i) { return std::pow(grid.at(i), dim - 1.0) * dr; };
    {
        const std::vector<C4> psi0 = w.evaluate(0.0);
        double acc = 0.0;
        for (int i = 0; i < nn; ++i)
            acc += std::norm(w.V(grid.at(i))) * psi0[i].squaredNorm() * weight(i);
        rep.scale = std::max(std::sqrt(acc), 1e-300);
    }

    for (double t : times) {
        const Complex e0 = std::exp(-I * w.omega0() * t), e1 = std::exp(-I * w.omega1() * t);
        const Complex f0 = std::conj(e0), f1 = std::conj(e1);
        double l2 = 0.0, sup = 0.0, l2_oracle = 0.0, agree = 0.0;
        for (int i = 0; i < nn; ++i) {
            const C4 psi = w.a0 * e0 * w.phi0.samples[i] + w.a1 * e1 * w.phi1.samples[i] +
                           w.b0 * f0 * w.chi0.samples[i] + w.b1 * f1 * w.chi1.samples[i];
            const C4 dpsi_dt_i = w.omega0() * w.a0 * e0 * w.phi0.samples[i] +
                                 w.omega1() * w.a1 * e1 * w.phi1.samples[i] -
                                 w.omega0() * w.b0 * f0 * w.chi0.samples[i] -
                                 w.omega1() * w.b1 * f1 * w.chi1.samples[i];
            const C4 Dm_psi = w.a0 * e0 * Dm_phi0.samples[i] + w.a1 * e1 * Dm_phi1.samples[i] +
                              w.b0 * f0 * Dm_chi0.samples[i] + w.b1 * f1 * Dm_chi1.samples[i];
            const Complex G = psi.dot(beta * psi);  // real up to rounding
            bool ext = false;
            const double fG = f.eval(G.real(), &ext);
            rep.extension_used = rep.extension_used || ext;
            const C4 beta_psi = beta * psi;
            const C4 R = dpsi_dt_i - Dm_psi + fG * beta_psi;

            // algebraic route: beta (f(F) - V) psi + per-mode eigen defects
            const double r = grid.at(i);
            const C4 eigen_terms =
                w.a0 * e0 * (w.omega0() * w.phi0.samples[i] - Hv_phi0.samples[i]) +
                w.a1 * e1 * (w.omega1() * w.phi1.samples[i] - Hv_phi1.samples[i]) +
                w.b0 * f0 * (-w.omega0() * w.chi0.samples[i] - Hv_chi0.samples[i]) +
                w.b1 * f1 * (-w.omega1() * w.chi1.samples[i] - Hv_chi1.samples[i]);
            const C4 R_alt = eigen_terms + (f.eval(F[i]) - w.V(r)) * beta_psi;

            const double wi = weight(i);
            l2 += R.squaredNorm() * wi;
            l2_oracle += R_alt.squaredNorm() * wi;
            agree += (R - R_alt).squaredNorm() * wi;
            sup = std::max(sup, R.cwiseAbs().maxCoeff());
        }
        rep.l2.push_back(std::sqrt(l2));
        rep.sup.push_back(sup);
        rep.l2_oracle.push_back(std::sqrt(l2_oracle));
        rep.agreement_l2.push_back(std::sqrt(agree));
    }
    return rep;
}

nlohmann::json DiracResidualReport::to_json() const {
    return {{"times", times},        {"l2", l2},
            {"sup", sup},            {"l2_oracle", l2_oracle},
            {"agreement_l2", agreement_l2}, {"extension_used", extension_used},
            {"scale", scale}};
}

nlohmann::json SpectrumProbe::to_json() const {
    nlohmann::json j;
    j["window"] = window;
    j["parseval_rel_error"] = parseval_rel_error;
    j["probes"] = {{"min", probes.min}, {"max", probes.max}, {"n", probes.n}};
    j["omega"] = {{"min", omega.min}, {"max", omega.max}, {"n", omega.n}};
    return j;
}

std::string SpectrumProbe::to_csv() const {
    std::string out = "omega";
    for (int p = 0; p < probes.n; ++p) {
        const std::string xs = std::to_string(probes.at(p));
        out += ",re(" + xs + "),im(" + xs + ")";
    }
    out += "\n";
    for (int l = 0; l < omega.n; ++l) {
        out += std::to_string(omega.at(l));
        for (int p = 0; p < probes.n; ++p) {
            out += "," + std::to_string(values[p][l].real()) + "," +
                   std::to_string(values[p][l].imag());
        }
        out += "\n";
    }
    return out;
}

}  // namespace cwave
