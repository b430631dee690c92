#pragma once

#include "cwave/dirac.hpp"
#include "cwave/schrodinger.hpp"
#include "cwave/soliton.hpp"

namespace cwave::testing {

/// Appendix pipeline at unit-test scale (m = 1, omega = 0.9), solved once
/// and shared across test cases.
struct SolitonFixture {
    double mass = 1.0;
    double omega = 0.9;
    RadialPotential W = RadialPotential::gaussian(1.45039, 5.26715);
    RadialPotential V;
    RadialGrid grid{70.0, 2800};
    RadialEigenpair ground, excited;
    MultiFrequencyWave wave;
    NonlinearityTable table;

    SolitonFixture() {
        V = scale_to_dirac_potential(W, mass, omega);
        ground = dirac_eigen(V, mass, omega, 0, grid);
        excited = dirac_eigen(V, mass, 0.5 * (mass + omega), 1, grid);
        wave = assemble_wave(ground, excited, V, mass, Complex(1.0), Complex(0.1), Complex(0.2),
                             Complex(0.1));
        std::vector<double> Vs(grid.nodes());
        for (int i = 0; i < grid.nodes(); ++i) Vs[i] = V(grid.at(i));
        table = build_nonlinearity(density_F(wave), Vs, grid);
    }
};

inline const SolitonFixture& soliton_fixture() {
    static SolitonFixture fx;
    return fx;
}

}  // namespace cwave::testing
