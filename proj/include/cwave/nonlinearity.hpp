#pragma once

#include <vector>

#include <json.hpp>

#include "cwave/polynomial.hpp"
#include "cwave/rational.hpp"

namespace cwave {

/// alpha(tau) = sign * (A(tau)/B(tau))^(1/N); B = 1 gives the pure-root
/// family. Covers both example families of the algebraic assumption.
struct AlgebraicNonlinearity {
    Polynomial A;
    Polynomial B = Polynomial::constant(1.0);
    int N = 1;
    int sign = +1;

    /// Checks B != 0 on tau >= 0, nonnegative radicand for even N and
    /// structural requirements; throws ConfigError on violation.
    void validate(double tau_max = 0.0) const;

    double alpha(double tau) const;          // throws Error on negative radicand
    double w(double tau) const;              // w(tau) = tau * alpha(tau)
    bool alpha_zero_at_origin() const;       // A(0)/B(0) == 0
    double suggested_tau_max() const;        // 10^3 * max(1, largest |root|)
};

enum class KappaClass { Admissible, Critical, Inadmissible };

const char* kappa_class_name(KappaClass c);

/// kappa = (deg A - deg B)/N, exact; throws ConfigError when deg A <= deg B.
Rational kappa_of(const AlgebraicNonlinearity& alpha);

/// Growth admissibility: n <= 2 admits all kappa > 0; n >= 3 compares with
/// the critical exponent 2/(n-2) exactly.
KappaClass classify_kappa(int n, const Rational& kappa);

/// Polynomials M_0..M_J with M(tau, w) = sum M_j(tau) w^j annihilating
/// w(tau) = tau*alpha(tau), subject to deg M_0 > deg M_j + j.
struct Certificate {
    std::vector<Polynomial> M;  // index j = 0..J

    int J() const { return static_cast<int>(M.size()) - 1; }
    /// deg M_0 > deg M_j + j for 1 <= j <= J, and M_J != 0.
    bool degree_condition_holds() const;
    double eval(double tau, double w) const;
    nlohmann::json to_json() const;
};

/// M_0 = -(sign*tau)^N A, M_N = B; throws ConfigError when deg A <= deg B
/// (the degree condition would fail).
Certificate build_certificate(const AlgebraicNonlinearity& alpha);

struct ResidualReport {
    double max_residual = 0.0;
    /// cancellation scale: max over samples of sum_j |M_j(tau)| |w|^j
    double scale = 0.0;
    double tau_at_max = 0.0;
};

ResidualReport certificate_residual(const Certificate& cert,
                                    const AlgebraicNonlinearity& alpha,
                                    const std::vector<double>& tau_samples);

/// Uniform samples [0, tau_max]; the default density follows the module
/// conventions (10^4 points).
std::vector<double> uniform_tau_samples(double tau_max, int count = 10000);

}  // namespace cwave
