#include "chieb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "chieb/ho.hpp"
#include "chieb/hydrogen.hpp"

namespace chieb {

double default_volume(const SweepConfig& config) {
    const Constants k = codata();
    if (config.model == ModelKind::hydrogen)
        return 4.0 / 3.0 * std::numbers::pi * std::pow(k.bohr_radius, 3);
    if (!(config.omega0 > 0.0)) throw std::domain_error("sweep: oscillator model needs omega0 > 0");
    return config.pair.e * config.pair.e /
           (4.0 * std::numbers::pi * k.eps0 * config.pair.m * config.omega0 * config.omega0);
}

namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g(points);
    const double a = std::log10(lo), b = std::log10(hi);
    for (int i = 0; i < points; ++i)
        g[i] = std::pow(10.0, a + (b - a) * i / double(points - 1));
    return g;
}

void append_log_points(std::vector<double>& g, double lo, double hi, double per_decade) {
    const int n = std::max(2, int(std::ceil((std::log10(hi) - std::log10(lo)) * per_decade)) + 1);
    const auto part = log_grid(lo, hi, n);
    g.insert(g.end(), part.begin(), part.end());
}

} // namespace

std::vector<double> make_grid(const SweepConfig& config) {
    if (!(config.omega_min > 0.0) || !(config.omega_min < config.omega_max))
        throw std::domain_error("sweep: need 0 < omega_min < omega_max");
    if (config.points == 1) throw std::domain_error("sweep: points must be >= 2");

    std::vector<double> grid;
    if (config.points >= 2) {
        if (config.spacing == Spacing::log) {
            grid = log_grid(config.omega_min, config.omega_max, config.points);
        } else {
            grid.resize(config.points);
            for (int i = 0; i < config.points; ++i)
                grid[i] = config.omega_min +
                          (config.omega_max - config.omega_min) * i / double(config.points - 1);
        }
        return grid;
    }

    if (config.model == ModelKind::ho) {
        if (!(config.omega0 > 0.0))
            throw std::domain_error("sweep: oscillator model needs omega0 > 0");
        return log_grid(1e-3 * config.omega0, 1e3 * config.omega0, 600);
    }

    // Hydrogen default: coarse base plus a dense band across the
    // resonances between the first excitation and the series limit.
    append_log_points(grid, config.omega_min, config.omega_max, 40.0);
    const double freq_au = AtomicUnits::standard().frequency;
    const double band_lo = 0.9 * 0.375 * freq_au;
    const double band_hi = 1.1 * 0.5 * freq_au;
    if (band_lo > config.omega_min && band_hi < config.omega_max)
        append_log_points(grid, band_lo, band_hi, 400.0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

SweepResult run_sweep(const SweepConfig& config) {
    const std::vector<double> grid = make_grid(config);
    const double volume = config.volume > 0.0 ? config.volume : default_volume(config);

    std::function<ResponseTensor(double)> eval;
    std::unique_ptr<HydrogenResponse> hydrogen;
    HOModel ho;
    if (config.model == ModelKind::hydrogen) {
        HydrogenModel m;
        m.pair = config.pair;
        m.unit_mass_ratio = config.unit_mass_ratio;
        m.fields = config.fields;
        m.gamma = config.gamma;
        m.n_max = config.n_max;
        hydrogen = std::make_unique<HydrogenResponse>(m);
        eval = [&h = *hydrogen](double w) { return h.chi_total(w); };
    } else {
        if (!(config.omega0 > 0.0))
            throw std::domain_error("sweep: oscillator model needs omega0 > 0");
        ho = HOModel{config.pair, config.omega0, config.fields};
        eval = [&ho](double w) { return ho_chi_total(ho, w); };
    }

    SweepResult result;
    result.volume = volume;
    result.axis = config.axis;
    result.rows.resize(grid.size());

    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
            try {
                const ResponseTensor t = eval(grid[i]);
                result.rows[i] = SweepRow{grid[i], t.entries, dimensionless(t, volume)(0, 1)};
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(grid.size());
                return;
            }
        }
    };

    unsigned nthreads = config.threads > 0 ? unsigned(config.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(grid.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return result;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

} // namespace

std::string csv_string(const SweepResult& result) {
    std::string out = "omega";
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            out += ",re_chi_" + std::to_string(i) + std::to_string(j);
            out += ",im_chi_" + std::to_string(i) + std::to_string(j);
        }
    out += ",re_chi12_dimless,im_chi12_dimless\n";
    const double axis_scale =
        result.axis == AxisConvention::hz ? 1.0 / (2.0 * std::numbers::pi) : 1.0;
    for (const auto& row : result.rows) {
        append_double(out, row.omega * axis_scale);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                out += ',';
                append_double(out, row.chi(i, j).real());
                out += ',';
                append_double(out, row.chi(i, j).imag());
            }
        out += ',';
        append_double(out, row.chi12_dimless.real());
        out += ',';
        append_double(out, row.chi12_dimless.imag());
        out += '\n';
    }
    return out;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_csv: cannot open " + path.string());
    f << csv_string(result);
}

double estimate_beta(const StaticFieldConfig& fields, double omega0, const ParticlePair& pair) {
    if (!(omega0 > 0.0)) throw std::domain_error("estimate_beta: omega0 must be positive");
    const Constants k = codata();
    return pair.e * pair.e * fields.B0.norm() * fields.E0.norm() /
           (k.c_light * pair.m * pair.m * omega0 * omega0);
}

double estimate_delta_n(double number_density, Complex chi12) {
    if (!(number_density > 0.0))
        throw std::domain_error("estimate_delta_n: number density must be positive");
    const Constants k = codata();
    return number_density * chi12.real() / (k.eps0 * k.c_light);
}

} // namespace chieb
