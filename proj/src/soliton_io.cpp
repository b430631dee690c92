#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cwave/soliton.hpp"

namespace fs = std::filesystem;

namespace cwave {

namespace {
nlohmann::json complex_json(const Complex& z) { return {z.real(), z.imag()}; }
Complex complex_from(const nlohmann::json& j) { return Complex(j.at(0), j.at(1)); }

nlohmann::json frame_vec_json(const C2& v) {
    return {complex_json(v(0)), complex_json(v(1))};
}
C2 frame_vec_from(const nlohmann::json& j) {
    return C2(complex_from(j.at(0)), complex_from(j.at(1)));
}

nlohmann::json potential_json(const RadialPotential& V) {
    nlohmann::json j;
    j["family"] = V.family_name();
    switch (V.family) {
        case RadialPotential::Family::Gaussian:
            j["depth"] = V.depth;
            j["width"] = V.width;
            break;
        case RadialPotential::Family::Coulomb: j["z"] = V.z; break;
        case RadialPotential::Family::Tabulated:
            j["r_max"] = V.grid.r_max;
            j["n_r"] = V.grid.n_r;
            break;
    }
    return j;
}

RadialPotential potential_from(const nlohmann::json& j, const RadialGrid& grid,
                               const std::vector<double>& samples) {
    const std::string fam = j.at("family");
    if (fam == "gaussian") return RadialPotential::gaussian(j.at("depth"), j.at("width"));
    if (fam == "coulomb") return RadialPotential::coulomb(j.at("z"));
    if (fam == "tabulated") return RadialPotential::tabulated(grid, samples);
    throw ConfigError("wave bundle: unknown potential family " + fam);
}
}  // namespace

std::string NonlinearityTable::to_csv() const {
    std::ostringstream out;
    out << std::setprecision(17) << "tau,f\n";
    for (size_t i = 0; i < f_.knots().size(); ++i)
        out << f_.knots()[i] << "," << f_.values()[i] << "\n";
    return out.str();
}

NonlinearityTable NonlinearityTable::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> tau, val;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("nonlinearity csv: malformed row");
        tau.push_back(std::stod(line.substr(0, comma)));
        val.push_back(std::stod(line.substr(comma + 1)));
    }
    return NonlinearityTable(MonotoneCubic::build(std::move(tau), std::move(val)), 0.0);
}

void save_wave_bundle(const MultiFrequencyWave& w, const NonlinearityTable& table,
                      const WaveValidation& validation, const std::string& dir) {
    fs::create_directories(dir);
    {
        std::ofstream out(fs::path(dir) / "profiles.csv");
        out << std::setprecision(17) << "r,v0,u0,v1,u1,V\n";
        for (int i = 0; i < w.grid().nodes(); ++i) {
            const double r = w.grid().at(i);
            out << r << "," << w.pair0.v[i] << "," << w.pair0.u[i] << "," << w.pair1.v[i] << ","
                << w.pair1.u[i] << "," << w.V(r) << "\n";
        }
    }
    {
        std::ofstream out(fs::path(dir) / "nonlinearity.csv");
        out << table.to_csv();
    }
    nlohmann::json j;
    j["mass"] = w.mass;
    j["omega0"] = w.omega0();
    j["omega1"] = w.omega1();
    j["amplitudes"] = {{"a0", complex_json(w.a0)},
                       {"a1", complex_json(w.a1)},
                       {"b0", complex_json(w.b0)},
                       {"b1", complex_json(w.b1)}};
    j["frame"] = {{"n0", frame_vec_json(w.frame.n0)},
                  {"n1", frame_vec_json(w.frame.n1)},
                  {"m0", frame_vec_json(w.frame.m0)},
                  {"m1", frame_vec_json(w.frame.m1)}};
    j["direction"] = {w.direction.x(), w.direction.y(), w.direction.z()};
    j["grid"] = {{"r_max", w.grid().r_max}, {"n_r", w.grid().n_r}};
    j["dim"] = w.pair0.dim;
    j["node_counts"] = {w.pair0.node_count, w.pair1.node_count};
    j["eigen_residuals"] = {w.pair0.residual, w.pair1.residual};
    j["potential"] = potential_json(w.V);
    j["table_noise_floor"] = table.noise_floor();
    std::ofstream(fs::path(dir) / "wave.json") << j.dump(2) << "\n";
    std::ofstream(fs::path(dir) / "validation.json") << validation.to_json().dump(2) << "\n";
}

WaveBundle load_wave_bundle(const std::string& dir) {
    std::ifstream meta(fs::path(dir) / "wave.json");
    if (!meta) throw ConfigError("wave bundle: cannot open " + dir + "/wave.json");
    nlohmann::json j;
    meta >> j;

    RadialGrid grid{j.at("grid").at("r_max"), j.at("grid").at("n_r")};
    grid.validate();

    RadialEigenpair p0, p1;
    p0.grid = p1.grid = grid;
    p0.mass = p1.mass = j.at("mass");
    p0.dim = p1.dim = j.at("dim");
    p0.omega = j.at("omega0");
    p1.omega = j.at("omega1");
    p0.node_count = j.at("node_counts").at(0);
    p1.node_count = j.at("node_counts").at(1);
    p0.residual = j.at("eigen_residuals").at(0);
    p1.residual = j.at("eigen_residuals").at(1);
    p0.v.resize(grid.nodes());
    p0.u.resize(grid.nodes());
    p1.v.resize(grid.nodes());
    p1.u.resize(grid.nodes());
    std::vector<double> V_samples(grid.nodes());
    {
        std::ifstream in(fs::path(dir) / "profiles.csv");
        if (!in) throw ConfigError("wave bundle: cannot open profiles.csv");
        std::string line;
        std::getline(in, line);
        for (int i = 0; i < grid.nodes(); ++i) {
            if (!std::getline(in, line)) throw ConfigError("wave bundle: truncated profiles.csv");
            std::stringstream ss(line);
            std::string cell;
            double cols[6];
            for (double& c : cols) {
                if (!std::getline(ss, cell, ',')) throw ConfigError("wave bundle: short row");
                c = std::stod(cell);
            }
            p0.v[i] = cols[1];
            p0.u[i] = cols[2];
            p1.v[i] = cols[3];
            p1.u[i] = cols[4];
            V_samples[i] = cols[5];
        }
    }

    const RadialPotential V = potential_from(j.at("potential"), grid, V_samples);
    SpinorFrame frame;
    frame.n0 = frame_vec_from(j.at("frame").at("n0"));
    frame.n1 = frame_vec_from(j.at("frame").at("n1"));
    frame.m0 = frame_vec_from(j.at("frame").at("m0"));
    frame.m1 = frame_vec_from(j.at("frame").at("m1"));
    const Eigen::Vector3d axis(j.at("direction").at(0), j.at("direction").at(1),
                               j.at("direction").at(2));

    WaveBundle bundle;
    bundle.wave = assemble_wave(p0, p1, V, j.at("mass"),
                                complex_from(j.at("amplitudes").at("a0")),
                                complex_from(j.at("amplitudes").at("a1")),
                                complex_from(j.at("amplitudes").at("b0")),
                                complex_from(j.at("amplitudes").at("b1")), frame, axis);
    std::ifstream tab(fs::path(dir) / "nonlinearity.csv");
    if (!tab) throw ConfigError("wave bundle: cannot open nonlinearity.csv");
    std::stringstream buf;
    buf << tab.rdbuf();
    bundle.table = NonlinearityTable::from_csv(buf.str());
    return bundle;
}

}  // namespace cwave
