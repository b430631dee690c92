#pragma once

#include <vector>

namespace cwave {

/// Shape-preserving piecewise-cubic Hermite interpolant on strictly
/// increasing knots. Slopes start from 4-point local polynomial estimates
/// (so smooth monotone data interpolates at fourth order) and are then
/// limited Fritsch-Carlson style, which keeps the interpolant monotone
/// between knots even where the data would make a plain cubic spline
/// overshoot.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    static MonotoneCubic build(std::vector<double> x, std::vector<double> y);

    /// Hermite evaluation; outside the knot range continues with the
    /// boundary value (constant extension).
    double operator()(double q) const;
    double derivative(double q) const;
    /// integral from the first knot to q (constant extension beyond the
    /// last knot), exact per Hermite segment
    double integral_to(double q) const;

    bool in_range(double q) const { return !x_.empty() && q >= x_.front() && q <= x_.back(); }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    const std::vector<double>& knots() const { return x_; }
    const std::vector<double>& values() const { return y_; }

  private:
    int interval(double q) const;
    std::vector<double> x_, y_, d_;
};

}  // namespace cwave
