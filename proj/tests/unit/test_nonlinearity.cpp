#include <doctest.h>

#include <cmath>
#include <random>

#include "cwave/nonlinearity.hpp"

using namespace cwave;

namespace {
AlgebraicNonlinearity sqrt_family(double A0, double A1) {
    // alpha = +sqrt(A0 + A1 tau)
    AlgebraicNonlinearity a;
    a.A = Polynomial({A0, A1});
    a.N = 2;
    a.sign = +1;
    return a;
}
}  // namespace

TEST_CASE("kappa_of examples") {
    CHECK(kappa_of(sqrt_family(1.0, 2.0)) == Rational(1, 2));

    AlgebraicNonlinearity rat;  // a=2, b=1, N=1
    rat.A = Polynomial({0.0, 1.0, 3.0});
    rat.B = Polynomial({1.0, 1.0});
    rat.N = 1;
    CHECK(kappa_of(rat) == Rational(1));

    AlgebraicNonlinearity cubic;  // alpha = tau
    cubic.A = Polynomial({0.0, 1.0});
    cubic.N = 1;
    CHECK(kappa_of(cubic) == Rational(1));

    AlgebraicNonlinearity flat;
    flat.A = Polynomial({0.0, 1.0});
    flat.B = Polynomial({0.5, 2.0});
    flat.N = 1;
    CHECK_THROWS_AS((void)kappa_of(flat), ConfigError);  // deg A <= deg B
}

TEST_CASE("classify_kappa") {
    CHECK(classify_kappa(3, Rational(1, 2)) == KappaClass::Admissible);
    CHECK(classify_kappa(6, Rational(1, 2)) == KappaClass::Critical);
    CHECK(classify_kappa(6, Rational(2, 3)) == KappaClass::Inadmissible);
    CHECK(classify_kappa(2, Rational(100)) == KappaClass::Admissible);
    CHECK(classify_kappa(1, Rational(100)) == KappaClass::Admissible);
    CHECK_THROWS_AS((void)classify_kappa(3, Rational(0)), ConfigError);
}

TEST_CASE("build_certificate: sqrt family") {
    auto cert = build_certificate(sqrt_family(1.0, 2.0));
    REQUIRE(cert.J() == 2);
    // M0 = -tau^2 (A0 + A1 tau) = -tau^2 - 2 tau^3
    CHECK(cert.M[0].coeffs() == std::vector<double>({0.0, 0.0, -1.0, -2.0}));
    CHECK(cert.M[1].is_zero());
    CHECK(cert.M[2].coeffs() == std::vector<double>({1.0}));
    CHECK(cert.degree_condition_holds());
}

TEST_CASE("build_certificate: cubic alpha = tau") {
    AlgebraicNonlinearity cubic;
    cubic.A = Polynomial({0.0, 1.0});
    cubic.N = 1;
    auto cert = build_certificate(cubic);
    CHECK(cert.M[0].coeffs() == std::vector<double>({0.0, 0.0, -1.0}));  // -tau^2
    CHECK(cert.M[1].coeffs() == std::vector<double>({1.0}));
}

TEST_CASE("build_certificate: negative sign bookkeeping (a=2, b=1, N=1)") {
    AlgebraicNonlinearity rat;
    rat.A = Polynomial({0.0, 1.0, 3.0});
    rat.B = Polynomial({1.0, 1.0});
    rat.N = 1;
    rat.sign = -1;
    auto cert = build_certificate(rat);
    // M0 = -(-tau) A = +tau A
    CHECK(cert.M[0].coeffs() == std::vector<double>({0.0, 0.0, 1.0, 3.0}));
    CHECK(cert.M[1].coeffs() == rat.B.coeffs());
    // the residual test is the real check of the sign convention
    auto rep = certificate_residual(cert, rat, uniform_tau_samples(50.0, 2000));
    CHECK(rep.max_residual <= 1e-12 * rep.scale);
}

TEST_CASE("certificate degree bookkeeping on random families") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> deg_a(1, 5), deg_n(1, 4);
    std::uniform_real_distribution<double> coeff(0.2, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int a = deg_a(rng);
        const int b = std::uniform_int_distribution<int>(0, a - 1)(rng);
        AlgebraicNonlinearity alpha;
        std::vector<double> ac(a + 1), bc(b + 1);
        for (double& c : ac) c = coeff(rng);
        for (double& c : bc) c = coeff(rng);
        alpha.A = Polynomial(ac);
        alpha.B = Polynomial(bc);
        alpha.N = deg_n(rng);
        alpha.sign = (trial % 2 == 0 && alpha.N % 2 == 1) ? -1 : +1;
        auto cert = build_certificate(alpha);
        CHECK(cert.degree_condition_holds());
        CHECK(*cert.M[0].degree() == a + alpha.N);
        CHECK(*cert.M[alpha.N].degree() == b);
        auto rep = certificate_residual(cert, alpha, uniform_tau_samples(1e3, 500));
        CHECK(rep.max_residual <= 1e-10 * rep.scale);
    }
}

TEST_CASE("certificate residual examples") {
    SUBCASE("sqrt family on [0, 10]") {
        auto alpha = sqrt_family(1.0, 2.0);
        auto cert = build_certificate(alpha);
        auto rep = certificate_residual(cert, alpha, uniform_tau_samples(10.0, 1000));
        CHECK(rep.max_residual <= 1e-10 * rep.scale);
    }
    SUBCASE("alpha = tau is exact in floating point") {
        AlgebraicNonlinearity cubic;
        cubic.A = Polynomial({0.0, 1.0});
        cubic.N = 1;
        auto cert = build_certificate(cubic);
        // -tau^2 + (tau * tau) cancels exactly, sample by sample
        auto rep = certificate_residual(cert, cubic, uniform_tau_samples(10.0, 100));
        CHECK(rep.max_residual == 0.0);
    }
    SUBCASE("perturbed certificate is detected") {
        auto alpha = sqrt_family(1.0, 2.0);
        auto cert = build_certificate(alpha);
        cert.M[0] = cert.M[0] + Polynomial::constant(1.0);
        auto rep = certificate_residual(cert, alpha, uniform_tau_samples(10.0, 100));
        CHECK(rep.max_residual >= 1.0);  // off by exactly 1 at tau = 0
    }
}

TEST_CASE("kappa matches the numerically fitted growth exponent") {
    auto check_fit = [](const AlgebraicNonlinearity& alpha) {
        const Rational kappa = kappa_of(alpha);
        const double k = static_cast<double>(numerator(kappa)) /
                         static_cast<double>(denominator(kappa));
        // two-point logarithmic slope at tau = 1e6; the two-point form
        // cancels the constant prefactor of the leading coefficient
        const double t1 = 1e5, t2 = 1e6;
        const double fitted = (std::log(std::abs(alpha.alpha(t2))) -
                               std::log(std::abs(alpha.alpha(t1)))) /
                              (std::log(t2) - std::log(t1));
        CHECK(std::abs(fitted - k) <= 0.01 * std::max(1.0, k));
    };
    check_fit(sqrt_family(1.0, 2.0));
    AlgebraicNonlinearity rat;
    rat.A = Polynomial({0.0, 1.0, 3.0});
    rat.B = Polynomial({1.0, 1.0});
    rat.N = 1;
    rat.sign = -1;
    check_fit(rat);
}

TEST_CASE("nonlinearity validation") {
    SUBCASE("B vanishing on the halfline is rejected") {
        AlgebraicNonlinearity bad;
        bad.A = Polynomial({0.0, 0.0, 1.0});
        bad.B = Polynomial({-1.0, 1.0});  // root at tau = 1
        bad.N = 1;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
    }
    SUBCASE("negative radicand with even N is rejected") {
        AlgebraicNonlinearity bad;
        bad.A = Polynomial({-1.0, -1.0});
        bad.N = 2;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
    }
    SUBCASE("alpha evaluation outside the domain throws") {
        auto alpha = sqrt_family(-1.0, 1.0);  // radicand negative on [0, 1)
        CHECK_THROWS_AS((void)alpha.alpha(0.5), Error);
    }
}
