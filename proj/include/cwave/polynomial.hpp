#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cwave {

/// Real polynomial, coefficients in ascending degree. The zero polynomial
/// has empty degree (the -infinity convention), so degree inequalities with
/// vanishing terms hold formally.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(double c) { return Polynomial({c}); }

    /// empty for the zero polynomial
    std::optional<int> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(int k) const;
    double leading() const;

    double operator()(double tau) const;  // Horner

    Polynomial operator*(double s) const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    /// multiply by tau^k
    Polynomial shifted_up(int k) const;

    /// Real roots via the companion-matrix eigenvalues; imaginary parts
    /// below imag_tol * scale are treated as zero.
    std::vector<double> real_roots(double imag_tol = 1e-9) const;

    std::string str(const std::string& var = "tau") const;

  private:
    std::vector<double> coeffs_;  // trailing coefficient nonzero unless empty
};

}  // namespace cwave
