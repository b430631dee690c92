#include <doctest.h>

#include <cmath>

#include "cwave/evolver.hpp"
#include "fixtures.hpp"

using namespace cwave;
using testing::soliton_fixture;

namespace {
std::vector<Complex> sech_soliton(int n, double L, double amp = std::sqrt(2.0),
                                  double x0 = 0.0) {
    std::vector<Complex> u(n);
    const double dx = 2.0 * L / n;
    for (int i = 0; i < n; ++i) u[i] = amp / std::cosh((-L + i * dx) - x0);
    return u;
}
}  // namespace

TEST_CASE("nls: linear plane wave picks up the exact phase") {
    const int n = 128;
    const double L = M_PI;
    const double k0 = 3.0;  // on-grid: base wavenumber pi/L = 1
    std::vector<Complex> u0(n);
    for (int i = 0; i < n; ++i)
        u0[i] = std::polar(1.0, k0 * (-L + i * 2.0 * L / n));
    EvolveOptions opt;
    opt.dt = 1e-3;
    opt.steps = 2000;
    opt.stride = 200;
    auto traj = evolve_nls(u0, L, AlphaSpec::polynomial(Polynomial::zero()), opt);
    const double T = opt.steps * opt.dt;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex want = u0[i] * std::polar(1.0, -k0 * k0 * T);
        worst = std::max(worst, std::abs(traj.snaps.back()[i] - want));
    }
    CHECK(worst <= 1e-10);
    CHECK(traj.max_mass_drift <= 1e-12);
}

TEST_CASE("nls: cubic focusing soliton is stationary in modulus") {
    // alpha(tau) = -tau, u = sqrt(2) sech(x) e^{it}: omega = -1
    const int n = 256;
    const double L = 20.0;
    EvolveOptions opt;
    opt.dt = 6.0 * M_PI / 16384.0;
    opt.steps = 17408;  // T ~ 20.03
    opt.stride = 128;
    auto traj = evolve_nls(sech_soliton(n, L), L, AlphaSpec::polynomial(Polynomial({0.0, -1.0})),
                           opt);
    CHECK(traj.max_mass_drift <= 1e-10);
    const auto var = modulus_variance(traj);
    double worst = 0.0;
    for (double v : var) worst = std::max(worst, v);
    CHECK(worst <= 1e-8);

    SUBCASE("hann spectrum: edges within one bin of omega = -1") {
        SpectrumRequest req;
        req.probes = Axis{-4.0, 4.0, 5};
        req.window_snapshots = 128;  // spans 6 pi: omega = -1 is bin -3
        auto [probe, gd] = time_spectrum(traj, req);
        CHECK(probe.parseval_rel_error <= 1e-8);
        const double bin = probe.omega.step();
        CHECK(bin == doctest::Approx(1.0 / 3.0));
        auto [a, b] = support_edges(gd);
        for (int p = 0; p < req.probes.n; ++p) {
            CHECK(std::abs(a[p] - (-1.0)) <= bin + 1e-12);
            CHECK(std::abs(b[p] - (-1.0)) <= bin + 1e-12);
        }
    }
    SUBCASE("rect spectrum: exactly single-bin, coupling to variance") {
        SpectrumRequest req;
        req.probes = Axis{-4.0, 4.0, 5};
        req.window_snapshots = 128;
        req.window = "rect";
        auto [probe, gd] = time_spectrum(traj, req);
        auto [a, b] = support_edges(gd);
        for (int p = 0; p < req.probes.n; ++p) {
            CHECK(b[p] - a[p] <= probe.omega.step() + 1e-12);  // single bin
            const int ix = static_cast<int>(std::lround((req.probes.at(p) + L) / traj.dx()));
            CHECK(var[ix] <= 1e-6);  // single-bin spectrum => static modulus
        }
    }
}

TEST_CASE("nls: two displaced solitons give two spectral peaks at a middle probe") {
    const int n = 512;
    const double L = 24.0;
    auto u0 = sech_soliton(n, L, std::sqrt(2.0), -7.0);
    const auto u1 = sech_soliton(n, L, 2.0 * std::sqrt(2.0) / 2.0 * std::sqrt(2.0), 7.0);
    // second soliton: amp a sqrt(2) sech(a x), a = sqrt(2) -> omega = -2
    const double a2 = std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        const double x = -L + i * 2.0 * L / n;
        u0[i] += a2 * std::sqrt(2.0) / std::cosh(a2 * (x - 7.0));
    }
    (void)u1;
    EvolveOptions opt;
    opt.dt = 6.0 * M_PI / 16384.0;
    opt.steps = 16384;
    opt.stride = 128;
    auto traj = evolve_nls(u0, L, AlphaSpec::polynomial(Polynomial({0.0, -1.0})), opt);
    SpectrumRequest req;
    req.probes = Axis{-1.0, 1.0, 3};
    req.window_snapshots = 128;
    auto [probe, gd] = time_spectrum(traj, req);
    const double bin = probe.omega.step();
    // peak finding at the center probe
    const auto& spec = probe.values[1];
    std::vector<double> peaks;
    for (int l = 1; l + 1 < probe.omega.n; ++l) {
        const double m0 = std::abs(spec[l]);
        if (m0 > std::abs(spec[l - 1]) && m0 > std::abs(spec[l + 1]) &&
            m0 > 0.05 * std::abs(spec[probe.omega.index_of(-1.0)]))
            peaks.push_back(probe.omega.at(l));
    }
    REQUIRE(peaks.size() >= 2);
    double best1 = 1e9, best2 = 1e9;
    for (double p : peaks) {
        best1 = std::min(best1, std::abs(p - (-1.0)));
        best2 = std::min(best2, std::abs(p - (-2.0)));
    }
    CHECK(best1 <= bin + 1e-12);
    CHECK(best2 <= bin + 1e-12);
}

TEST_CASE("nlkg: linear dispersion relation is recovered") {
    const int n = 128;
    const double L = 8.0;
    const double m = 1.3;
    const double k0 = 2.0 * M_PI / L;  // j = 2 mode of the box [-L, L)
    const double Om = std::sqrt(k0 * k0 + m * m);
    std::vector<Complex> u0(n), v0(n);
    for (int i = 0; i < n; ++i) {
        const double x = -L + i * 2.0 * L / n;
        u0[i] = 0.01 * std::polar(1.0, k0 * x);
        v0[i] = Complex(0.0, -Om) * u0[i];  // selects the e^{-i Om t} branch
    }
    EvolveOptions opt;
    opt.dt = 0.02;
    opt.steps = 12800;
    opt.stride = 100;
    auto traj = evolve_nlkg(u0, v0, L, m, AlphaSpec::polynomial(Polynomial::zero()), opt);
    CHECK(traj.max_energy_drift <= 1e-10);  // splitting exact for alpha = 0

    SpectrumRequest req;
    req.probes = Axis{-2.0, 2.0, 3};
    req.window_snapshots = 128;
    auto [probe, gd] = time_spectrum(traj, req);
    int l_peak = 0;
    double best = 0.0;
    for (int l = 0; l < probe.omega.n; ++l)
        if (std::abs(probe.values[1][l]) > best) {
            best = std::abs(probe.values[1][l]);
            l_peak = l;
        }
    CHECK(std::abs(probe.omega.at(l_peak) - Om) <= probe.omega.step() + 1e-12);
}

TEST_CASE("nlkg: small standing wave with alpha = tau conserves energy") {
    const int n = 128;
    const double L = 8.0;
    std::vector<Complex> u0(n), v0(n, Complex(0.0));
    for (int i = 0; i < n; ++i) {
        const double x = -L + i * 2.0 * L / n;
        u0[i] = 0.05 * std::cos(M_PI * x / L);
    }
    EvolveOptions opt;
    opt.dt = 0.005;
    opt.steps = 4000;
    opt.stride = 40;
    auto traj = evolve_nlkg(u0, v0, L, 1.0, AlphaSpec::polynomial(Polynomial({0.0, 1.0})), opt);
    CHECK(traj.max_energy_drift <= 1e-6);
}

TEST_CASE("nlkg: zero data stays zero; guards fire") {
    const int n = 64;
    const double L = 4.0;
    std::vector<Complex> z(n, Complex(0.0));
    EvolveOptions opt;
    opt.dt = 0.01;
    opt.steps = 100;
    opt.stride = 10;
    auto traj = evolve_nlkg(z, z, L, 1.0, AlphaSpec::polynomial(Polynomial({0.0, 1.0})), opt);
    for (const auto& snap : traj.snaps)
        for (const Complex& c : snap) CHECK(std::abs(c) == 0.0);

    SUBCASE("cfl guard") {
        EvolveOptions bad = opt;
        bad.dt = 1.0;  // dx = 0.125
        CHECK_THROWS_AS((void)evolve_nlkg(z, z, L, 1.0,
                                          AlphaSpec::polynomial(Polynomial::zero()), bad),
                        ConfigError);
    }
    SUBCASE("blow-up guard") {
        EvolveOptions bad;
        bad.dt = 1e-3;
        bad.steps = 10;
        bad.stride = 1;
        bad.blowup_guard = 0.5;
        auto u0 = sech_soliton(n, L);  // max sqrt(2) > 0.5
        CHECK_THROWS_AS((void)evolve_nls(u0, L, AlphaSpec::polynomial(Polynomial({0.0, -1.0})),
                                         bad),
                        BlowUpError);
    }
}

TEST_CASE("time_spectrum on synthetic trajectories") {
    Trajectory1D traj;
    traj.L = 4.0;
    traj.n_x = 16;
    traj.dt = 0.05;
    traj.stride = 1;
    const int N = 128;
    SUBCASE("stationary field concentrates at omega = 0") {
        for (int k = 0; k < N; ++k) {
            traj.times.push_back(k * traj.dt);
            std::vector<Complex> snap(traj.n_x);
            for (int i = 0; i < traj.n_x; ++i) snap[i] = std::exp(-std::abs(traj.x(i)));
            traj.snaps.push_back(snap);
        }
        SpectrumRequest req;
        req.probes = Axis{-2.0, 2.0, 5};
        auto [probe, gd] = time_spectrum(traj, req);
        auto [a, b] = support_edges(gd);
        for (int p = 0; p < 5; ++p) {
            CHECK(std::abs(a[p]) <= probe.omega.step() + 1e-12);
            CHECK(std::abs(b[p]) <= probe.omega.step() + 1e-12);
        }
    }
    SUBCASE("two-tone beat: rect edges give b - a = omega1 - omega0 exactly") {
        const double dOm = 2.0 * M_PI / (N * traj.dt);
        const double w0 = 10.0 * dOm, w1 = 30.0 * dOm;  // both on-bin
        for (int k = 0; k < N; ++k) {
            const double t = k * traj.dt;
            traj.times.push_back(t);
            std::vector<Complex> snap(traj.n_x);
            for (int i = 0; i < traj.n_x; ++i)
                snap[i] = std::polar(1.0, -w0 * t) + std::polar(1.0, -w1 * t);
            traj.snaps.push_back(snap);
        }
        SpectrumRequest req;
        req.probes = Axis{-1.0, 1.0, 3};
        req.window = "rect";
        auto [probe, gd] = time_spectrum(traj, req);
        CHECK(probe.parseval_rel_error <= 1e-10);
        auto [a, b] = support_edges(gd);
        for (int p = 0; p < 3; ++p)
            CHECK(std::abs((b[p] - a[p]) - (w1 - w0)) <= probe.omega.step() + 1e-12);

        SUBCASE("beat modulus variance is order one with the beat period") {
            const auto var = modulus_variance(traj);
            // |u|^2 = 2 + 2cos((w1-w0)t): var/mean^2 = 2/4 = 1/2
            for (double v : var) CHECK(v == doctest::Approx(0.5).epsilon(0.05));
        }
    }
    SUBCASE("fewer than 16 snapshots is an error") {
        for (int k = 0; k < 8; ++k) {
            traj.times.push_back(k * traj.dt);
            traj.snaps.emplace_back(traj.n_x, Complex(1.0));
        }
        SpectrumRequest req;
        req.probes = Axis{-1.0, 1.0, 3};
        CHECK_THROWS_AS((void)time_spectrum(traj, req), ConfigError);
    }
}

TEST_CASE("modulus_variance: zero field reports zero") {
    Trajectory1D traj;
    traj.L = 1.0;
    traj.n_x = 8;
    traj.dt = 0.1;
    for (int k = 0; k < 20; ++k) {
        traj.times.push_back(k * traj.dt);
        traj.snaps.emplace_back(traj.n_x, Complex(0.0));
    }
    for (double v : modulus_variance(traj)) CHECK(v == 0.0);
}

TEST_CASE("trajectory binary round trip") {
    const int n = 32;
    const double L = 4.0;
    EvolveOptions opt;
    opt.dt = 0.01;
    opt.steps = 50;
    opt.stride = 5;
    std::vector<Complex> u0(n), v0(n);
    for (int i = 0; i < n; ++i) {
        u0[i] = Complex(std::sin(i * 0.3), std::cos(i * 0.7));
        v0[i] = Complex(0.1 * i, -0.2);
    }
    auto traj = evolve_nlkg(u0, v0, L, 1.0, AlphaSpec::polynomial(Polynomial({0.0, 1.0})), opt);
    traj.save_binary("/tmp/cwave_test_traj.bin");
    auto back = Trajectory1D::load_binary("/tmp/cwave_test_traj.bin");
    CHECK(back.n_x == traj.n_x);
    CHECK(back.L == traj.L);
    CHECK(back.has_velocity);
    REQUIRE(back.snapshot_count() == traj.snapshot_count());
    for (int k = 0; k < traj.snapshot_count(); ++k) {
        CHECK(back.times[k] == traj.times[k]);
        for (int i = 0; i < n; ++i) {
            CHECK(back.snaps[k][i] == traj.snaps[k][i]);
            CHECK(back.velocity_snaps[k][i] == traj.velocity_snaps[k][i]);
        }
    }
}

TEST_CASE("dirac residual of the assembled wave") {
    const auto& fx = soliton_fixture();
    auto rep = dirac_residual(fx.wave, fx.table, {0.0, 0.4, 1.3});
    SUBCASE("residual small against the potential-term scale") {
        for (double l2 : rep.l2) CHECK(l2 <= 0.05 * rep.scale);
        CHECK(!rep.extension_used);
    }
    SUBCASE("direct and algebraic routes agree") {
        for (size_t i = 0; i < rep.times.size(); ++i) {
            CHECK(rep.agreement_l2[i] <=
                  10.0 * (fx.ground.residual + fx.excited.residual +
                          fx.grid.dr() * fx.grid.dr() * rep.scale) +
                      1e-12);
            CHECK(rep.l2[i] == doctest::Approx(rep.l2_oracle[i]).epsilon(0.05));
        }
    }
    SUBCASE("corrupted nonlinearity is detected") {
        // scale the table values by 1.1: residual jumps to ~0.1 ||V psi||
        auto knots = fx.table.interp().knots();
        auto vals = fx.table.interp().values();
        for (double& v : vals) v *= 1.1;
        NonlinearityTable bad(MonotoneCubic::build(knots, vals), fx.table.noise_floor());
        auto rep_bad = dirac_residual(fx.wave, bad, {0.0});
        CHECK(rep_bad.l2[0] >= 0.05 * rep.scale);
        CHECK(rep_bad.l2[0] >= 10.0 * rep.l2[0]);
    }
}
