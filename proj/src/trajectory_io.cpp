#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>

#include "cwave/evolver.hpp"

namespace cwave {

namespace {
constexpr char kMagic[8] = {'C', 'W', 'T', 'R', 'A', 'J', '0', '1'};

// Little-endian 64-bit columnar layout:
//   magic[8]
//   i64 n_x, i64 n_snap, i64 has_velocity, i64 stride
//   f64 L, f64 dt
//   f64 times[n_snap]
//   per snapshot: n_x (re, im) f64 pairs, then the same for velocity
//   snapshots when present

void put_i64(std::ofstream& out, int64_t v) { out.write(reinterpret_cast<char*>(&v), 8); }
void put_f64(std::ofstream& out, double v) { out.write(reinterpret_cast<char*>(&v), 8); }
int64_t get_i64(std::ifstream& in) {
    int64_t v;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
double get_f64(std::ifstream& in) {
    double v;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
}  // namespace

void Trajectory1D::save_binary(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out.write(kMagic, 8);
    put_i64(out, n_x);
    put_i64(out, snapshot_count());
    put_i64(out, has_velocity ? 1 : 0);
    put_i64(out, stride);
    put_f64(out, L);
    put_f64(out, dt);
    for (double t : times) put_f64(out, t);
    auto dump = [&](const std::vector<std::vector<Complex>>& field) {
        for (const auto& snap : field)
            for (const Complex& z : snap) {
                put_f64(out, z.real());
                put_f64(out, z.imag());
            }
    };
    dump(snaps);
    if (has_velocity) dump(velocity_snaps);
}

Trajectory1D Trajectory1D::load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    char magic[8];
    in.read(magic, 8);
    if (std::memcmp(magic, kMagic, 8) != 0)
        throw ConfigError(path + ": not a cwave trajectory file");
    Trajectory1D traj;
    traj.n_x = static_cast<int>(get_i64(in));
    const int64_t n_snap = get_i64(in);
    traj.has_velocity = get_i64(in) != 0;
    traj.stride = static_cast<int>(get_i64(in));
    traj.L = get_f64(in);
    traj.dt = get_f64(in);
    traj.times.resize(n_snap);
    for (double& t : traj.times) t = get_f64(in);
    auto slurp = [&](std::vector<std::vector<Complex>>& field) {
        field.assign(n_snap, std::vector<Complex>(traj.n_x));
        for (auto& snap : field)
            for (Complex& z : snap) {
                const double re = get_f64(in);
                const double im = get_f64(in);
                z = Complex(re, im);
            }
    };
    slurp(traj.snaps);
    if (traj.has_velocity) slurp(traj.velocity_snaps);
    if (!in) throw ConfigError(path + ": truncated trajectory file");
    return traj;
}

void Trajectory1D::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << std::setprecision(17) << "x";
    for (double t : times) out << ",re(" << t << "),im(" << t << ")";
    out << "\n";
    for (int i = 0; i < n_x; ++i) {
        out << x(i);
        for (int k = 0; k < snapshot_count(); ++k)
            out << "," << snaps[k][i].real() << "," << snaps[k][i].imag();
        out << "\n";
    }
}

}  // namespace cwave
