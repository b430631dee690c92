#include "cwave/interp.hpp"

#include <algorithm>
#include <cmath>

#include "cwave/common.hpp"

namespace cwave {

namespace {
// Derivative of the local cubic through 4 points, evaluated at x[i].
double four_point_slope(const std::vector<double>& x, const std::vector<double>& y, int i0,
                        int i) {
    double d = 0.0;
    for (int j = 0; j < 4; ++j) {
        const int pj = i0 + j;
        double term = 0.0;
        for (int k = 0; k < 4; ++k) {
            if (k == j) continue;
            double prod = 1.0;
            for (int l = 0; l < 4; ++l) {
                if (l == j || l == k) continue;
                prod *= (x[i] - x[i0 + l]) / (x[pj] - x[i0 + l]);
            }
            term += prod / (x[pj] - x[i0 + k]);
        }
        d += y[pj] * term;
    }
    return d;
}
}  // namespace

MonotoneCubic MonotoneCubic::build(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("MonotoneCubic: need >= 2 knots with matching values");
    for (size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw NonMonotoneInputError("MonotoneCubic: knots not increasing");

    const int n = static_cast<int>(x.size());
    std::vector<double> d(n, 0.0), delta(n - 1);
    for (int i = 0; i < n - 1; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);

    if (n == 2) {
        d[0] = d[1] = delta[0];
    } else {
        for (int i = 0; i < n; ++i) {
            int i0 = std::clamp(i - 1, 0, n - 4);
            if (n == 3) {
                // quadratic through all three
                const double h0 = x[1] - x[0], h1 = x[2] - x[1];
                if (i == 0) d[0] = delta[0] + (delta[0] - delta[1]) * h0 / (h0 + h1);
                else if (i == 1) d[1] = (delta[0] * h1 + delta[1] * h0) / (h0 + h1);
                else d[2] = delta[1] + (delta[1] - delta[0]) * h1 / (h0 + h1);
                continue;
            }
            d[i] = four_point_slope(x, y, i0, i);
        }
    }

    // Fritsch-Carlson limiter: for each node clamp the slope into the
    // monotone region of the adjacent secants. Inactive on well-resolved
    // strictly monotone data.
    for (int i = 0; i < n; ++i) {
        const double dl = (i > 0) ? delta[i - 1] : delta[0];
        const double dr = (i < n - 1) ? delta[i] : delta[n - 2];
        if (dl == 0.0 || dr == 0.0 || (dl > 0) != (dr > 0)) {
            d[i] = 0.0;
            continue;
        }
        const double cap = 3.0 * std::min(std::abs(dl), std::abs(dr));
        if ((d[i] > 0) != (dl > 0)) d[i] = 0.0;
        else if (std::abs(d[i]) > cap) d[i] = std::copysign(cap, dl);
    }

    MonotoneCubic mc;
    mc.x_ = std::move(x);
    mc.y_ = std::move(y);
    mc.d_ = std::move(d);
    return mc;
}

int MonotoneCubic::interval(double q) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), q);
    int i = static_cast<int>(it - x_.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(x_.size()) - 2);
}

double MonotoneCubic::operator()(double q) const {
    if (q <= x_.front()) return y_.front();
    if (q >= x_.back()) return y_.back();
    const int i = interval(q);
    const double h = x_[i + 1] - x_[i];
    const double t = (q - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
}

double MonotoneCubic::integral_to(double q) const {
    if (q <= x_.front()) return 0.0;
    auto segment_full = [&](int i) {
        const double h = x_[i + 1] - x_[i];
        // Hermite basis integrals over [0,1]: 1/2, 1/12, 1/2, -1/12
        return h * (0.5 * y_[i] + h * d_[i] / 12.0 + 0.5 * y_[i + 1] - h * d_[i + 1] / 12.0);
    };
    double acc = 0.0;
    const int n = static_cast<int>(x_.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (q >= x_[i + 1]) {
            acc += segment_full(i);
            continue;
        }
        const double h = x_[i + 1] - x_[i];
        const double t = (q - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
        const double H00 = 0.5 * t4 - t3 + t;                  // int h00
        const double H10 = 0.25 * t4 - (2.0 / 3.0) * t3 + 0.5 * t2;
        const double H01 = -0.5 * t4 + t3;
        const double H11 = 0.25 * t4 - t3 / 3.0;
        acc += h * (H00 * y_[i] + h * H10 * d_[i] + H01 * y_[i + 1] + h * H11 * d_[i + 1]);
        return acc;
    }
    return acc + y_.back() * (q - x_.back());  // constant extension
}

double MonotoneCubic::derivative(double q) const {
    if (q <= x_.front() || q >= x_.back()) return 0.0;
    const int i = interval(q);
    const double h = x_[i + 1] - x_[i];
    const double t = (q - x_[i]) / h;
    const double t2 = t * t;
    const double g00 = (6 * t2 - 6 * t) / h, g10 = 3 * t2 - 4 * t + 1;
    const double g01 = (-6 * t2 + 6 * t) / h, g11 = 3 * t2 - 2 * t;
    return g00 * y_[i] + g10 * d_[i] + g01 * y_[i + 1] + g11 * d_[i + 1];
}

}  // namespace cwave
