#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chieb/tensor.hpp"
#include "chieb/units.hpp"

namespace chieb {

enum class ModelKind { ho, hydrogen };
enum class Spacing { log, linear };
enum class AxisConvention { rad_s, hz };

/// Frequency-sweep configuration. All frequencies are specified in rad/s;
/// the axis convention only affects how the omega column is printed.
struct SweepConfig {
    ModelKind model = ModelKind::hydrogen;
    double omega_min = 1e12;
    double omega_max = 1e20;
    int points = 0; ///< 0 selects the default grid for the model
    Spacing spacing = Spacing::log;
    StaticFieldConfig fields{Eigen::Vector3d(1e5, 0.0, 0.0), Eigen::Vector3d(0.0, 10.0, 0.0)};
    double omega0 = 0.0; ///< trap frequency (oscillator model only), rad/s
    double gamma = 1e8;  ///< line width (hydrogen model only), rad/s
    int n_max = 20;
    double volume = 0.0; ///< m^3 for the dimensionless column; 0 = model default
    AxisConvention axis = AxisConvention::rad_s;
    std::string out_path;
    std::string svg_path;
    int threads = 0; ///< worker count; 0 = hardware concurrency
    ParticlePair pair = electron_proton_pair();
    bool unit_mass_ratio = true; ///< hydrogen mass-asymmetry replacement
};

struct SweepRow {
    double omega = 0.0; ///< rad/s
    Matrix3c chi = Matrix3c::Zero();
    Complex chi12_dimless = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double volume = 0.0;
    AxisConvention axis = AxisConvention::rad_s;
};

/// Default volume used for the dimensionless column: the 1s atomic volume
/// (4/3) pi a0^3 for hydrogen, e^2 / (4 pi eps0 m w0^2) for the oscillator.
double default_volume(const SweepConfig& config);

/// Strictly increasing frequency grid. With points == 0 the hydrogen model
/// gets 40 log points per decade plus a 400-per-decade refinement across
/// the resonance band, and the oscillator gets 600 log points spanning
/// [1e-3, 1e3] w0.
std::vector<double> make_grid(const SweepConfig& config);

SweepResult run_sweep(const SweepConfig& config);

std::string csv_string(const SweepResult& result);
void write_csv(const SweepResult& result, const std::filesystem::path& path);

/// Minimal polyline SVG of Re chi12_dimless versus omega (log x, symlog y).
void write_svg(const SweepResult& result, const std::filesystem::path& path);

/// Dimensionless size estimate e^2 |E| |B| / (c m^2 w0^2).
double estimate_beta(const StaticFieldConfig& fields, double omega0, const ParticlePair& pair);

/// Refractive-index contrast (N/V) chi12 / (eps0 c); the real part of
/// chi12 (SI, C m / T) enters.
double estimate_delta_n(double number_density, Complex chi12);

} // namespace chieb
