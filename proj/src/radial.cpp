#include "cwave/radial.hpp"

#include <cmath>

namespace cwave {

RadialPotential RadialPotential::gaussian(double depth, double width) {
    // depth 0 is admitted so solvers can be probed with V = 0; the shape
    // validation used by the builder pipeline still rejects it.
    if (!(depth >= 0.0) || !(width > 0.0))
        throw ConfigError("gaussian potential: needs depth >= 0 and width > 0");
    RadialPotential p;
    p.family = Family::Gaussian;
    p.depth = depth;
    p.width = width;
    return p;
}

RadialPotential RadialPotential::coulomb(double z) {
    if (!(z > 0.0)) throw ConfigError("coulomb potential: z must be positive");
    RadialPotential p;
    p.family = Family::Coulomb;
    p.z = z;
    return p;
}

RadialPotential RadialPotential::tabulated(const RadialGrid& grid, std::vector<double> samples) {
    grid.validate();
    if (static_cast<int>(samples.size()) != grid.nodes())
        throw ConfigError("tabulated potential: sample count does not match grid");
    RadialPotential p;
    p.family = Family::Tabulated;
    p.grid = grid;
    std::vector<double> knots(grid.nodes());
    for (int i = 0; i < grid.nodes(); ++i) knots[i] = grid.at(i);
    p.interp = MonotoneCubic::build(std::move(knots), samples);
    p.samples = std::move(samples);
    return p;
}

double RadialPotential::operator()(double r) const {
    switch (family) {
        case Family::Gaussian: {
            const double s = r / width;
            return depth * std::exp(-s * s);
        }
        case Family::Coulomb:
            return z / std::max(r, 1e-300);
        case Family::Tabulated:
            return interp(r);
    }
    return 0.0;
}

void RadialPotential::validate_shape(double r_max) const {
    const int probes = 256;
    double prev = singular_at_origin() ? (*this)(r_max * 1e-6) : (*this)(0.0);
    if (!(prev > 0.0)) throw ConfigError("radial potential: not positive at the origin");
    for (int i = 1; i <= probes; ++i) {
        const double r = r_max * i / probes;
        const double w = (*this)(r);
        if (!(w < prev)) throw ConfigError("radial potential: not strictly decreasing");
        if (!(w >= 0.0)) throw ConfigError("radial potential: negative value");
        prev = w;
    }
}

std::string RadialPotential::family_name() const {
    switch (family) {
        case Family::Gaussian: return "gaussian";
        case Family::Coulomb: return "coulomb";
        case Family::Tabulated: return "tabulated";
    }
    return "?";
}

RadialPotential scale_to_dirac_potential(const RadialPotential& W, double m, double omega) {
    if (!(omega > 0.0) || !(omega < m))
        throw ConfigError("scale_to_dirac_potential: omega must lie in (0, m)");
    const double gap = m - omega;
    const double stretch = std::sqrt(gap);
    switch (W.family) {
        case RadialPotential::Family::Gaussian:
            return RadialPotential::gaussian(gap * W.depth, W.width / stretch);
        case RadialPotential::Family::Coulomb:
            // (m-w) z / (sqrt(m-w) r) = sqrt(m-w) z / r
            return RadialPotential::coulomb(stretch * W.z);
        case RadialPotential::Family::Tabulated: {
            RadialGrid out{W.grid.r_max / stretch, W.grid.n_r};
            std::vector<double> vals(out.nodes());
            for (int i = 0; i < out.nodes(); ++i) vals[i] = gap * W(stretch * out.at(i));
            return RadialPotential::tabulated(out, std::move(vals));
        }
    }
    throw Error("scale_to_dirac_potential: unknown family");
}

double integrate_uniform(const std::vector<double>& f, double dx) {
    const int n = static_cast<int>(f.size());
    if (n < 2) return 0.0;
    double acc = 0.0;
    int i = 0;
    // even panel count for Simpson; mop up a trailing panel by trapezoid
    int last_simpson = (n - 1) % 2 == 0 ? n - 1 : n - 2;
    for (; i + 2 <= last_simpson; i += 2) acc += (f[i] + 4.0 * f[i + 1] + f[i + 2]) * dx / 3.0;
    if (last_simpson != n - 1) acc += 0.5 * (f[n - 2] + f[n - 1]) * dx;
    return acc;
}

}  // namespace cwave
