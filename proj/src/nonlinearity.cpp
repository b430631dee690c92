#include "cwave/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

namespace cwave {

namespace {
constexpr double kSignTol = 1e-9;

double nth_root(double x, int n) {
    if (n % 2 == 0) {
        if (x < 0) throw Error("negative radicand under even root");
        return std::pow(x, 1.0 / n);
    }
    return std::copysign(std::pow(std::abs(x), 1.0 / n), x);
}

// No sign change of p on [0, tau_max]: check values at 0, tau_max, between
// consecutive nonnegative real roots, and a coarse sample sweep.
bool nonnegative_on_halfline(const Polynomial& p, double tau_max, double tol_scale) {
    if (p.is_zero()) return true;
    std::vector<double> probes{0.0, tau_max, 2.0 * tau_max};
    std::vector<double> roots = p.real_roots();
    roots.erase(std::remove_if(roots.begin(), roots.end(),
                               [&](double r) { return r < -kSignTol || r > 2.0 * tau_max; }),
                roots.end());
    for (size_t i = 0; i < roots.size(); ++i) {
        probes.push_back(std::max(0.0, roots[i]));
        if (i + 1 < roots.size()) probes.push_back(0.5 * (roots[i] + roots[i + 1]));
        probes.push_back(roots[i] + 1.0);
    }
    for (int k = 0; k <= 64; ++k) probes.push_back(tau_max * k / 64.0);
    for (double t : probes)
        if (p(t) < -kSignTol * tol_scale) return false;
    return true;
}

double poly_scale(const Polynomial& p, double tau_max) {
    double s = 0.0;
    for (size_t k = 0; k < p.coeffs().size(); ++k)
        s += std::abs(p.coeffs()[k]) * std::pow(std::max(1.0, tau_max), static_cast<double>(k));
    return std::max(1.0, s);
}
}  // namespace

void AlgebraicNonlinearity::validate(double tau_max) const {
    if (N < 1) throw ConfigError("nonlinearity: N must be a positive integer");
    if (sign != 1 && sign != -1) throw ConfigError("nonlinearity: sign must be +1 or -1");
    if (A.is_zero()) throw ConfigError("nonlinearity: A must be nonzero");
    if (B.is_zero()) throw ConfigError("nonlinearity: B must be nonzero");
    if (tau_max <= 0.0) tau_max = suggested_tau_max();

    // B(tau) != 0 for tau >= 0: no nonnegative real root and no sign change.
    for (double r : B.real_roots())
        if (r > -kSignTol && r < 2.0 * tau_max)
            throw ConfigError("nonlinearity: B vanishes at tau = " + std::to_string(r));
    if (B(0.0) == 0.0) throw ConfigError("nonlinearity: B(0) = 0");

    if (N % 2 == 0) {
        // Even root: the radicand A/B must be nonnegative on tau >= 0.
        const bool b_pos = B(0.0) > 0.0;
        const Polynomial radicand_sign = b_pos ? A : A * -1.0;
        if (!nonnegative_on_halfline(radicand_sign, tau_max, poly_scale(A, tau_max)))
            throw ConfigError("nonlinearity: A/B negative somewhere on tau >= 0 with even N");
    }
}

double AlgebraicNonlinearity::alpha(double tau) const {
    return sign * nth_root(A(tau) / B(tau), N);
}

double AlgebraicNonlinearity::w(double tau) const { return tau * alpha(tau); }

bool AlgebraicNonlinearity::alpha_zero_at_origin() const { return A(0.0) == 0.0; }

double AlgebraicNonlinearity::suggested_tau_max() const {
    double r_max = 0.0;
    for (double r : A.real_roots()) r_max = std::max(r_max, std::abs(r));
    for (double r : B.real_roots()) r_max = std::max(r_max, std::abs(r));
    return 1e3 * std::max(1.0, r_max);
}

const char* kappa_class_name(KappaClass c) {
    switch (c) {
        case KappaClass::Admissible: return "admissible";
        case KappaClass::Critical: return "critical";
        case KappaClass::Inadmissible: return "inadmissible";
    }
    return "?";
}

Rational kappa_of(const AlgebraicNonlinearity& alpha) {
    const auto da = alpha.A.degree(), db = alpha.B.degree();
    if (!da) throw ConfigError("kappa_of: A is the zero polynomial");
    const int b = db ? *db : 0;
    if (*da <= b)
        throw ConfigError("kappa_of: deg A <= deg B, alpha is not unbounded with kappa > 0");
    return Rational(*da - b, alpha.N);
}

KappaClass classify_kappa(int n, const Rational& kappa) {
    if (kappa <= 0) throw ConfigError("classify_kappa: kappa must be positive");
    if (n < 1) throw ConfigError("classify_kappa: n must be >= 1");
    if (n <= 2) return KappaClass::Admissible;
    const Rational critical(2, n - 2);
    if (kappa < critical) return KappaClass::Admissible;
    if (kappa == critical) return KappaClass::Critical;
    return KappaClass::Inadmissible;
}

bool Certificate::degree_condition_holds() const {
    if (M.empty() || M.back().is_zero()) return false;
    const auto d0 = M[0].degree();
    if (!d0) return false;
    for (int j = 1; j <= J(); ++j) {
        const auto dj = M[j].degree();
        if (dj && !(*d0 > *dj + j)) return false;
    }
    return true;
}

double Certificate::eval(double tau, double w) const {
    double acc = 0.0, wj = 1.0;
    for (const Polynomial& Mj : M) {
        acc += Mj(tau) * wj;
        wj *= w;
    }
    return acc;
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Polynomial& Mj : M) arr.push_back(Mj.coeffs());
    return {{"M", arr}, {"J", J()}, {"degree_condition", degree_condition_holds()}};
}

Certificate build_certificate(const AlgebraicNonlinearity& alpha) {
    alpha.validate();
    const auto da = alpha.A.degree();
    const int b = alpha.B.degree() ? *alpha.B.degree() : 0;
    if (!da || *da <= b)
        throw ConfigError("build_certificate: needs deg A > deg B for the degree condition");

    // M_0 = -(sign * tau)^N * A, all middle terms zero, M_N = B; then
    // M(tau, tau*alpha) = -(sign tau)^N A + B (tau alpha)^N = 0.
    const double sign_pow = (alpha.sign < 0 && alpha.N % 2 == 1) ? -1.0 : 1.0;
    Certificate cert;
    cert.M.assign(alpha.N + 1, Polynomial::zero());
    cert.M[0] = alpha.A.shifted_up(alpha.N) * (-sign_pow);
    cert.M[alpha.N] = alpha.B;
    if (!cert.degree_condition_holds())
        throw Error("build_certificate: constructed certificate violates the degree chain");
    return cert;
}

ResidualReport certificate_residual(const Certificate& cert,
                                    const AlgebraicNonlinearity& alpha,
                                    const std::vector<double>& tau_samples) {
    ResidualReport rep;
    for (double tau : tau_samples) {
        const double w = alpha.w(tau);
        const double r = std::abs(cert.eval(tau, w));
        double s = 0.0, wj = 1.0;
        for (const Polynomial& Mj : cert.M) {
            double m_abs = 0.0;
            for (size_t k = 0; k < Mj.coeffs().size(); ++k)
                m_abs += std::abs(Mj.coeffs()[k]) * std::pow(std::abs(tau), static_cast<double>(k));
            s += m_abs * std::abs(wj);
            wj *= w;
        }
        rep.scale = std::max(rep.scale, s);
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.tau_at_max = tau;
        }
    }
    rep.scale = std::max(rep.scale, 1e-300);
    return rep;
}

std::vector<double> uniform_tau_samples(double tau_max, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = tau_max * i / (count - 1.0);
    return out;
}

}  // namespace cwave
