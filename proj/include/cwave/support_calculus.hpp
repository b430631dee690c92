#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cwave/edge_function.hpp"
#include "cwave/grid.hpp"

namespace cwave {

/// Complex samples on a uniform (x, omega) grid. Samples with modulus
/// <= support_threshold are treated as zero for all support bookkeeping.
struct GriddedDistribution {
    Grid2 grid;
    std::vector<Complex> values;  // row-major, index (i_x, i_omega)
    double support_threshold = 0.0;

    GriddedDistribution() = default;
    explicit GriddedDistribution(Grid2 g, double threshold = 0.0)
        : grid(g),
          values(static_cast<size_t>(g.x.n) * g.omega.n, Complex(0.0, 0.0)),
          support_threshold(threshold) {
        grid.validate();
        if (threshold < 0.0) throw ConfigError("support_threshold must be >= 0");
    }

    Complex& at(int ix, int iw) { return values[static_cast<size_t>(ix) * grid.omega.n + iw]; }
    const Complex& at(int ix, int iw) const {
        return values[static_cast<size_t>(ix) * grid.omega.n + iw];
    }

    bool above_threshold(int ix, int iw) const {
        return std::abs(at(ix, iw)) > support_threshold;
    }

    /// First omega index with modulus above threshold in column ix, or -1.
    int first_support_index(int ix) const;
    /// Last omega index with modulus above threshold in column ix, or -1.
    int last_support_index(int ix) const;

    double max_abs() const;
};

/// a_f, b_f: per-column inf/sup of the omega-support; +inf resp. -inf on
/// empty columns.
std::pair<EdgeFunction, EdgeFunction> support_edges(const GriddedDistribution& f);

/// Indices of nonempty columns (projection of the support onto the x axis).
std::vector<int> sigma(const GriddedDistribution& f);

/// Per-column discrete linear convolution along omega, scaled by d_omega.
/// Output omega axis spans [2 omega_min, 2 omega_max] with 2 n_omega - 1
/// nodes so that support bookkeeping is exact.  Throws GridMismatchError.
GriddedDistribution partial_convolution(const GriddedDistribution& f,
                                        const GriddedDistribution& g);

/// f_sharp(x, omega) = conj(f(x, -omega)); requires omega_min = -omega_max.
GriddedDistribution sharp(const GriddedDistribution& f);

/// Columnwise and envelope-level verification of support additivity under
/// partial convolution.
struct TitchmarshReport {
    // Per-column edge data (omega units; +-inf on empty columns).
    std::vector<double> a_f, b_f, a_g, b_g, a_conv, b_conv;
    std::vector<double> a_env_conv, a_env_sum;  // a^U of conv vs a_f^U + a_g^U
    std::vector<double> b_env_conv, b_env_sum;  // b^L of conv vs b_f^L + b_g^L
    std::vector<double> env_bound_a, env_bound_b;  // osc1 sums

    int max_index_discrepancy_a = 0;  // inf-support index arithmetic
    int max_index_discrepancy_b = 0;  // sup-support index arithmetic
    double max_env_discrepancy_a = 0.0;
    double max_env_discrepancy_b = 0.0;
    double max_env_excess_a = 0.0;  // discrepancy minus osc bound, <= 0 expected
    double max_env_excess_b = 0.0;

    bool columnwise_exact = false;
    bool envelope_within_bound = false;
    bool pass = false;

    nlohmann::json to_json() const;
};

TitchmarshReport check_titchmarsh_partial(const GriddedDistribution& f,
                                          const GriddedDistribution& g);

// --- serialization (see External Interfaces) ---

/// CSV: header "x,re(w0),im(w0),..."; one row per x-column.
void save_csv(const GriddedDistribution& f, const std::string& path);

/// JSON descriptor {grid, threshold, data_path} next to the CSV payload.
void save_descriptor(const GriddedDistribution& f, const std::string& json_path,
                     const std::string& csv_path);
GriddedDistribution load_descriptor(const std::string& json_path);

}  // namespace cwave
