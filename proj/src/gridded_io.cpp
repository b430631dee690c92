#include <fstream>
#include <iomanip>
#include <sstream>

#include "cwave/support_calculus.hpp"

namespace cwave {

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    return out;
}
}  // namespace

void save_csv(const GriddedDistribution& f, const std::string& path) {
    std::ofstream out = open_out(path);
    out << std::setprecision(17);
    out << "x";
    for (int k = 0; k < f.grid.omega.n; ++k) {
        const double w = f.grid.omega.at(k);
        out << ",re(" << w << "),im(" << w << ")";
    }
    out << "\n";
    for (int i = 0; i < f.grid.x.n; ++i) {
        out << f.grid.x.at(i);
        for (int k = 0; k < f.grid.omega.n; ++k)
            out << "," << f.at(i, k).real() << "," << f.at(i, k).imag();
        out << "\n";
    }
}

namespace {
GriddedDistribution load_csv(const Grid2& grid, double threshold, const std::string& path) {
    GriddedDistribution f(grid, threshold);
    std::ifstream in = open_in(path);
    std::string line;
    std::getline(in, line);  // header
    for (int i = 0; i < grid.x.n; ++i) {
        if (!std::getline(in, line)) throw ConfigError(path + ": truncated CSV");
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // x column
        for (int k = 0; k < grid.omega.n; ++k) {
            std::string re, im;
            if (!std::getline(ss, re, ',') || !std::getline(ss, im, ','))
                throw ConfigError(path + ": short row");
            f.at(i, k) = Complex(std::stod(re), std::stod(im));
        }
    }
    return f;
}
}  // namespace

void save_descriptor(const GriddedDistribution& f, const std::string& json_path,
                     const std::string& csv_path) {
    save_csv(f, csv_path);
    nlohmann::json j;
    j["grid"] = {{"x_min", f.grid.x.min},         {"x_max", f.grid.x.max},
                 {"n_x", f.grid.x.n},             {"omega_min", f.grid.omega.min},
                 {"omega_max", f.grid.omega.max}, {"n_omega", f.grid.omega.n}};
    j["threshold"] = f.support_threshold;
    j["data_path"] = csv_path;
    std::ofstream out = open_out(json_path);
    out << j.dump(2) << "\n";
}

GriddedDistribution load_descriptor(const std::string& json_path) {
    std::ifstream in = open_in(json_path);
    nlohmann::json j;
    in >> j;
    Grid2 grid;
    grid.x = Axis{j["grid"]["x_min"], j["grid"]["x_max"], j["grid"]["n_x"]};
    grid.omega = Axis{j["grid"]["omega_min"], j["grid"]["omega_max"], j["grid"]["n_omega"]};
    grid.validate();
    return load_csv(grid, j["threshold"], j["data_path"]);
}

}  // namespace cwave
