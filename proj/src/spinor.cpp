#include "cwave/spinor.hpp"

#include <cmath>

namespace cwave {

namespace {
const Complex kI(0.0, 1.0);
}

M2 pauli(int k) {
    M2 s = M2::Zero();
    switch (k) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw ConfigError("pauli: index must be 1, 2 or 3");
    }
    return s;
}

M2 sigma_r(const Eigen::Vector3d& x_hat) {
    const double nrm = x_hat.norm();
    if (!(std::abs(nrm - 1.0) < 1e-12))
        throw ConfigError("sigma_r: direction must be a unit vector");
    return x_hat.x() * pauli(1) + x_hat.y() * pauli(2) + x_hat.z() * pauli(3);
}

M4 beta_matrix() {
    M4 b = M4::Zero();
    b.diagonal() << 1, 1, -1, -1;
    return b;
}

M4 gamma2_matrix() {
    M4 g = M4::Zero();
    g.block<2, 2>(0, 2) = pauli(2);
    g.block<2, 2>(2, 0) = -pauli(2);
    return g;
}

SpinorFrame SpinorFrame::canonical() {
    SpinorFrame f;
    f.n0 = C2(1, 0);
    f.n1 = C2(0, 1);
    f.m0 = C2(1, 0);
    f.m1 = C2(0, 1);
    return f;
}

bool SpinorFrame::orthonormal(double tol) const {
    return std::abs(n0.norm() - 1.0) < tol && std::abs(n1.norm() - 1.0) < tol &&
           std::abs(m0.norm() - 1.0) < tol && std::abs(m1.norm() - 1.0) < tol &&
           std::abs(n0.dot(n1)) < tol && std::abs(m0.dot(m1)) < tol;
}

Spinor4Profile assemble_profile(SpinorKind kind, const RadialEigenpair& pair, const C2& frame,
                                const Eigen::Vector3d& direction) {
    Spinor4Profile p;
    p.kind = kind;
    p.grid = pair.grid;
    p.v = pair.v;
    p.u = pair.u;
    p.frame = frame;
    p.direction = direction;
    p.omega = pair.omega;
    const M2 sr = sigma_r(direction);
    p.samples.resize(p.grid.nodes());
    for (int i = 0; i < p.grid.nodes(); ++i) {
        C4 s;
        if (kind == SpinorKind::Phi) {
            s.head<2>() = pair.v[i] * frame;
            s.tail<2>() = kI * pair.u[i] * (sr * frame);
        } else {
            s.head<2>() = -kI * pair.u[i] * (sr * frame);
            s.tail<2>() = pair.v[i] * frame;
        }
        p.samples[i] = s;
    }
    return p;
}

Spinor4Profile charge_conjugate(const Spinor4Profile& profile, double tol) {
    const M4 ig2 = kI * gamma2_matrix();
    // direct matrix application, sample by sample
    std::vector<C4> conjugated(profile.samples.size());
    double max_abs = 0.0;
    for (size_t i = 0; i < profile.samples.size(); ++i) {
        conjugated[i] = ig2 * profile.samples[i].conjugate();
        max_abs = std::max(max_abs, conjugated[i].cwiseAbs().maxCoeff());
    }

    // closed form: the conjugate of a phi-profile is the chi-profile with
    // m = -i sigma_2 conj(n) (and back to phi with n = i sigma_2 conj(m))
    Spinor4Profile out;
    out.grid = profile.grid;
    out.v = profile.v;
    out.u = profile.u;
    out.direction = profile.direction;
    out.omega = -profile.omega;
    if (profile.kind == SpinorKind::Phi) {
        out.kind = SpinorKind::Chi;
        out.frame = -kI * (pauli(2) * profile.frame.conjugate());
    } else {
        out.kind = SpinorKind::Phi;
        out.frame = kI * (pauli(2) * profile.frame.conjugate());
    }
    const M2 sr = sigma_r(out.direction);
    out.samples.resize(out.grid.nodes());
    for (int i = 0; i < out.grid.nodes(); ++i) {
        C4 s;
        if (out.kind == SpinorKind::Chi) {
            s.head<2>() = -kI * out.u[i] * (sr * out.frame);
            s.tail<2>() = out.v[i] * out.frame;
        } else {
            s.head<2>() = out.v[i] * out.frame;
            s.tail<2>() = kI * out.u[i] * (sr * out.frame);
        }
        out.samples[i] = s;
        const double mismatch = (s - conjugated[i]).cwiseAbs().maxCoeff();
        if (mismatch > tol * std::max(1.0, max_abs))
            throw Error("charge_conjugate: closed form disagrees with i gamma^2 K application");
    }
    return out;
}

std::vector<Complex> beta_product_pointwise(const Spinor4Profile& a, const Spinor4Profile& b) {
    if (!(a.grid == b.grid)) throw GridMismatchError("beta_product: grids differ");
    std::vector<Complex> out(a.samples.size());
    for (size_t i = 0; i < a.samples.size(); ++i) {
        const C4& x = a.samples[i];
        const C4& y = b.samples[i];
        out[i] = x.head<2>().dot(y.head<2>()) - x.tail<2>().dot(y.tail<2>());
    }
    return out;
}

Complex beta_product_integral(const Spinor4Profile& a, const Spinor4Profile& b, int dim) {
    const std::vector<Complex> prod = beta_product_pointwise(a, b);
    std::vector<double> re(prod.size()), im(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) {
        const double w = std::pow(a.grid.at(static_cast<int>(i)), dim - 1.0);
        re[i] = prod[i].real() * w;
        im[i] = prod[i].imag() * w;
    }
    const double dr = a.grid.dr();
    return Complex(integrate_uniform(re, dr), integrate_uniform(im, dr));
}

Spinor4Profile apply_dirac_minus_beta_v(const Spinor4Profile& in, const RadialPotential& V,
                                        double m, int dim) {
    const RadialGrid& g = in.grid;
    const double dr = g.dr();
    const int N = g.n_r;
    std::vector<double> hv(g.nodes()), hu(g.nodes());

    auto d_centered = [&](const std::vector<double>& f, int i) {
        return (f[i + 1] - f[i - 1]) / (2.0 * dr);
    };
    auto d_left = [&](const std::vector<double>& f) {  // at i = 0, O(dr^2)
        return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dr);
    };
    auto d_right = [&](const std::vector<double>& f) {  // at i = N
        return (3.0 * f[N] - 4.0 * f[N - 1] + f[N - 2]) / (2.0 * dr);
    };

    for (int i = 0; i <= N; ++i) {
        const double r = g.at(i);
        const double mv = m - V(r);
        double du, dv, u_over_r;
        if (i == 0) {
            du = d_left(in.u);
            dv = 0.0;  // v is even at the origin
            u_over_r = du;  // u ~ u'(0) r
        } else if (i == N) {
            du = d_right(in.u);
            dv = d_right(in.v);
            u_over_r = in.u[i] / r;
        } else {
            du = d_centered(in.u, i);
            dv = d_centered(in.v, i);
            u_over_r = in.u[i] / r;
        }
        hv[i] = mv * in.v[i] + du + (dim - 1) * u_over_r;
        hu[i] = -dv - mv * in.u[i];
    }

    Spinor4Profile out = in;
    if (in.kind == SpinorKind::Chi) {
        // conjugation flips the sign of the radial action
        for (int i = 0; i <= N; ++i) {
            hv[i] = -hv[i];
            hu[i] = -hu[i];
        }
    }
    out.v = hv;
    out.u = hu;
    const M2 sr = sigma_r(in.direction);
    for (int i = 0; i <= N; ++i) {
        C4 s;
        if (in.kind == SpinorKind::Phi) {
            s.head<2>() = hv[i] * in.frame;
            s.tail<2>() = kI * hu[i] * (sr * in.frame);
        } else {
            s.head<2>() = -kI * hu[i] * (sr * in.frame);
            s.tail<2>() = hv[i] * in.frame;
        }
        out.samples[i] = s;
    }
    return out;
}

}  // namespace cwave
