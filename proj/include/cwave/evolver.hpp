#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwave/polynomial.hpp"
#include "cwave/soliton.hpp"
#include "cwave/support_calculus.hpp"

namespace cwave {

/// Nonlinearity alpha(tau) of the dispersive equations: polynomial closed
/// form or a tabulated monotone function.
struct AlphaSpec {
    enum class Kind { Poly, Table };
    Kind kind = Kind::Poly;
    Polynomial poly;        // alpha(tau)
    NonlinearityTable table;

    static AlphaSpec polynomial(Polynomial p) {
        AlphaSpec a;
        a.kind = Kind::Poly;
        a.poly = std::move(p);
        return a;
    }
    static AlphaSpec tabulated(NonlinearityTable t) {
        AlphaSpec a;
        a.kind = Kind::Table;
        a.table = std::move(t);
        return a;
    }

    double operator()(double tau) const;
    /// antiderivative int_0^tau alpha(s) ds (for the energy functional)
    double antiderivative(double tau) const;
};

/// Complex field snapshots on a periodic box [-L, L); for the second-order
/// equation the velocity snapshots ride along.
struct Trajectory1D {
    double L = 1.0;
    int n_x = 2;
    double dt = 0.0;
    int stride = 1;
    std::vector<double> times;
    std::vector<std::vector<Complex>> snaps;
    std::vector<std::vector<Complex>> velocity_snaps;
    bool has_velocity = false;

    double max_mass_drift = 0.0;    // relative, NLS
    double max_energy_drift = 0.0;  // relative, NLKG

    double dx() const { return 2.0 * L / n_x; }
    double x(int i) const { return -L + i * dx(); }
    int snapshot_count() const { return static_cast<int>(times.size()); }
    double snapshot_dt() const;

    void save_binary(const std::string& path) const;
    static Trajectory1D load_binary(const std::string& path);
    void save_csv(const std::string& path) const;
};

struct EvolveOptions {
    double dt = 1e-3;
    int steps = 1000;
    int stride = 10;          // snapshot every `stride` steps
    double blowup_guard = 1e6;
    double cfl_factor = 0.5;  // NLKG accuracy guard dt <= cfl_factor * dx
};

/// Strang split-step for i u_t = -u_xx + alpha(|u|^2) u: exact nonlinear
/// phase rotation and exact Fourier multiplier for the linear flow. Mass is
/// conserved to rounding; the observed relative drift is recorded.
Trajectory1D evolve_nls(const std::vector<Complex>& u0, double L, const AlphaSpec& alpha,
                        const EvolveOptions& opt);

/// Strang split-step for -u_tt = -u_xx + m^2 u + alpha(|u|^2) u as a
/// first-order system: exact Fourier rotation at Omega_k = sqrt(k^2 + m^2)
/// plus nonlinear kicks. Tracks the discrete energy drift.
Trajectory1D evolve_nlkg(const std::vector<Complex>& u0, const std::vector<Complex>& v0,
                         double L, double mass, const AlphaSpec& alpha,
                         const EvolveOptions& opt);

double nls_mass(const std::vector<Complex>& u, double dx);
double nlkg_energy(const std::vector<Complex>& u, const std::vector<Complex>& v, double L,
                   double mass, const AlphaSpec& alpha);

/// Hann-windowed per-probe DFT in time; omega axis symmetric about zero
/// (the Nyquist bin of even windows is dropped). Needs >= 16 snapshots.
struct SpectrumProbe {
    Axis probes;        // probe positions (uniform)
    Axis omega;         // symmetric DFT axis
    std::string window = "hann";
    std::vector<std::vector<Complex>> values;  // [probe][omega]
    double parseval_rel_error = 0.0;           // unwindowed check, all bins

    nlohmann::json to_json() const;
    std::string to_csv() const;  // omega, re/im per probe
};

struct SpectrumRequest {
    Axis probes;
    int window_snapshots = 0;  // use the last w snapshots; 0 = all
    double relative_threshold = 1e-6;
    std::string window = "hann";  // "hann" or "rect"
};

/// Returns the probe spectra plus the (probe, omega) GriddedDistribution
/// handed to the support calculus.
std::pair<SpectrumProbe, GriddedDistribution> time_spectrum(const Trajectory1D& traj,
                                                            const SpectrumRequest& req);

/// Per grid point: variance over time of |u(x, t)|^2 normalized by the
/// squared mean (0 where the mean vanishes).
std::vector<double> modulus_variance(const Trajectory1D& traj);

/// Nonlinear Dirac residual R = i dt psi - D_m psi + f(psi* beta psi) beta psi
/// of the assembled wave, with analytic time derivative, evaluated at the
/// requested times; plus the independent algebraic route
/// R = beta (f(F) - V) psi + eigen-residual terms.
struct DiracResidualReport {
    std::vector<double> times;
    std::vector<double> l2, sup;             // direct evaluation
    std::vector<double> l2_oracle;           // algebraic identity route
    std::vector<double> agreement_l2;        // ||direct - oracle||_L2
    bool extension_used = false;             // f evaluated beyond the table
    double scale = 1.0;                      // ||V psi||_L2 at t = 0

    nlohmann::json to_json() const;
};

DiracResidualReport dirac_residual(const MultiFrequencyWave& wave, const NonlinearityTable& f,
                                   const std::vector<double>& times);

}  // namespace cwave
