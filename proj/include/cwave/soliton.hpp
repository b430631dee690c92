#pragma once

#include <string>

#include <json.hpp>

#include "cwave/interp.hpp"
#include "cwave/spinor.hpp"

namespace cwave {

/// Tabulated monotone nonlinearity f with f(0) = 0, built by inverting
/// f(F(r)) = V(r). Beyond the last knot it continues with the constant
/// V(0); evaluation reports when that extension is used.
class NonlinearityTable {
  public:
    NonlinearityTable() = default;
    NonlinearityTable(MonotoneCubic f, double noise_floor);

    double eval(double tau, bool* used_extension = nullptr) const;
    double tau_max() const { return f_.x_max(); }
    const MonotoneCubic& interp() const { return f_; }
    double noise_floor() const { return noise_floor_; }

    /// strictly increasing knots starting at 0 with f(0) = 0
    void check_invariants() const;

    std::string to_csv() const;
    static NonlinearityTable from_csv(const std::string& text);

  private:
    MonotoneCubic f_;
    double noise_floor_ = 0.0;
};

/// The four-frequency ansatz
///   psi = a0 phi0 e^{-i w0 t} + a1 phi1 e^{-i w1 t}
///       + b0 chi0 e^{+i w0 t} + b1 chi1 e^{+i w1 t}
/// assembled along a fixed direction with an orthonormal frame.
struct MultiFrequencyWave {
    double mass = 1.0;
    Complex a0, a1, b0, b1;
    RadialEigenpair pair0, pair1;  // omega0 = pair0.omega < omega1 = pair1.omega
    SpinorFrame frame;
    Eigen::Vector3d direction = Eigen::Vector3d::UnitZ();
    RadialPotential V;
    Spinor4Profile phi0, phi1, chi0, chi1;

    double omega0() const { return pair0.omega; }
    double omega1() const { return pair1.omega; }
    const RadialGrid& grid() const { return pair0.grid; }

    /// psi(r x_hat, t) on the radial grid
    std::vector<C4> evaluate(double t) const;
};

/// Assembles profiles and checks the structural invariants
/// 0 < omega0 < omega1 < m and |a0|^2 > |b0|^2.
MultiFrequencyWave assemble_wave(const RadialEigenpair& ground, const RadialEigenpair& excited,
                                 const RadialPotential& V, double mass, Complex a0, Complex a1,
                                 Complex b0, Complex b1,
                                 const SpinorFrame& frame = SpinorFrame::canonical(),
                                 const Eigen::Vector3d& direction = Eigen::Vector3d::UnitZ());

/// F(r) = (|a0|^2-|b0|^2)(v0^2-u0^2) + (|a1|^2-|b1|^2)(v1^2-u1^2);
/// also evaluates psi* beta psi directly at t in {0, 0.37, 1.1} and checks
/// time independence and agreement to 1e-12 * scale.
std::vector<double> density_F(const MultiFrequencyWave& wave);

struct WaveValidation {
    bool F_positive = false;
    bool F_strictly_decreasing = false;
    bool v0_positive = false;
    bool amplitude_margin = false;  // |a0|^2 > |b0|^2
    double first_violation_r = -1.0;
    bool pass() const {
        return F_positive && F_strictly_decreasing && v0_positive && amplitude_margin;
    }
    nlohmann::json to_json() const;
};

WaveValidation validate_wave(const MultiFrequencyWave& wave);

/// All cross beta-inner products over the grid (integrated along the
/// axis with weight r^{n-1}), plus the pointwise maximum over matched
/// phi/chi pairs, which vanish identically by the block structure.
struct BetaOrthogonalityReport {
    // rows/cols ordered phi0, phi1, chi0, chi1
    double integrals[4][4] = {};
    double max_offdiag_integral = 0.0;
    double norm_scale = 1.0;
    bool pass(double tol = 1e-12) const { return max_offdiag_integral <= tol * norm_scale; }
    nlohmann::json to_json() const;
};

BetaOrthogonalityReport beta_orthogonality_report(const MultiFrequencyWave& wave);

/// Monotone inversion f(F(r)) = V(r): knots tau_i = F(r_i) reversed to
/// increasing order, a (0, 0) knot prepended, tail entries below the noise
/// floor 1e-12 max(F) dropped. Exact at the knots by construction.
NonlinearityTable build_nonlinearity(const std::vector<double>& F,
                                     const std::vector<double>& V_samples,
                                     const RadialGrid& grid);

// --- wave bundle serialization (profiles CSV + JSON metadata + table CSV) ---
void save_wave_bundle(const MultiFrequencyWave& wave, const NonlinearityTable& table,
                      const WaveValidation& validation, const std::string& dir);
struct WaveBundle {
    MultiFrequencyWave wave;
    NonlinearityTable table;
};
WaveBundle load_wave_bundle(const std::string& dir);

}  // namespace cwave
