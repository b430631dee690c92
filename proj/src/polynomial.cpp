#include "cwave/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace cwave {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

double Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[k];
}

double Polynomial::leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

double Polynomial::operator()(double tau) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tau + *it;
    return acc;
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) + other.coeff(static_cast<int>(k));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<double> c(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted_up(int k) const {
    if (is_zero()) return Polynomial();
    std::vector<double> c(coeffs_.size() + k, 0.0);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
    return Polynomial(std::move(c));
}

std::vector<double> Polynomial::real_roots(double imag_tol) const {
    std::vector<double> roots;
    if (coeffs_.size() < 2) return roots;
    const int d = static_cast<int>(coeffs_.size()) - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs_[i] / coeffs_.back();
    const Eigen::VectorXcd ev = companion.eigenvalues();
    double scale = 0.0;
    for (int i = 0; i < d; ++i) scale = std::max(scale, std::abs(ev[i]));
    for (int i = 0; i < d; ++i)
        if (std::abs(ev[i].imag()) <= imag_tol * std::max(1.0, scale))
            roots.push_back(ev[i].real());
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const double c = coeffs_[k];
        if (c == 0.0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        const double a = std::abs(c);
        if (k == 0 || a != 1.0) out << a;
        if (k > 0) {
            if (a != 1.0) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

}  // namespace cwave
