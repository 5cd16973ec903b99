// Command-line frontend: frequency sweeps with CSV/SVG output, size
// estimates, convergence tables and the oracle validation suite.

#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chieb/errors.hpp"
#include "chieb/hydrogen.hpp"
#include "chieb/sweep.hpp"
#include "chieb/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPole = 3;

Eigen::Vector3d parse_vec3(const std::string& s) {
    Eigen::Vector3d v;
    std::istringstream in(s);
    std::string tok;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(in, tok, ',')) throw std::domain_error("expected x,y,z triple: " + s);
        v(i) = std::stod(tok);
    }
    if (std::getline(in, tok, ',')) throw std::domain_error("expected exactly three components: " + s);
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

struct SweepFlags {
    std::string model = "hydrogen";
    std::string spacing = "log";
    std::string axis = "rad_s";
    std::string e0 = "1e5,0,0";
    std::string b0 = "0,10,0";
    std::string out = "sweep.csv";
    std::string svg;
    double omega_min = 1e12, omega_max = 1e20, omega0 = 0.0, gamma = 1e8, volume = 0.0;
    int points = 0, n_max = 20, threads = 0;
};

chieb::SweepConfig to_config(const SweepFlags& f) {
    chieb::SweepConfig c;
    if (f.model == "ho")
        c.model = chieb::ModelKind::ho;
    else if (f.model == "hydrogen")
        c.model = chieb::ModelKind::hydrogen;
    else
        throw std::domain_error("unknown model: " + f.model);
    if (f.spacing == "log")
        c.spacing = chieb::Spacing::log;
    else if (f.spacing == "linear")
        c.spacing = chieb::Spacing::linear;
    else
        throw std::domain_error("unknown spacing: " + f.spacing);
    if (f.axis == "rad_s")
        c.axis = chieb::AxisConvention::rad_s;
    else if (f.axis == "hz")
        c.axis = chieb::AxisConvention::hz;
    else
        throw std::domain_error("unknown axis convention: " + f.axis);
    c.omega_min = f.omega_min;
    c.omega_max = f.omega_max;
    c.points = f.points;
    c.fields.E0 = parse_vec3(f.e0);
    c.fields.B0 = parse_vec3(f.b0);
    c.omega0 = f.omega0;
    c.gamma = f.gamma;
    c.n_max = f.n_max;
    c.volume = f.volume;
    c.out_path = f.out;
    c.svg_path = f.svg;
    c.threads = f.threads;
    return c;
}

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
    cmd->add_option("--model", f.model, "ho or hydrogen");
    cmd->add_option("--omega-min", f.omega_min, "grid start, rad/s");
    cmd->add_option("--omega-max", f.omega_max, "grid end, rad/s");
    cmd->add_option("--points", f.points, "grid size (0 = model default grid)");
    cmd->add_option("--spacing", f.spacing, "log or linear");
    cmd->add_option("--e0", f.e0, "static electric field, V/m, as x,y,z");
    cmd->add_option("--b0", f.b0, "static magnetic field, T, as x,y,z");
    cmd->add_option("--gamma", f.gamma, "line width, rad/s (hydrogen)");
    cmd->add_option("--n-max", f.n_max, "bound-state cutoff (hydrogen)");
    cmd->add_option("--omega0", f.omega0, "trap frequency, rad/s (ho)");
    cmd->add_option("--volume", f.volume, "volume for the dimensionless column, m^3");
    cmd->add_option("--axis", f.axis, "omega column convention: rad_s or hz");
    cmd->add_option("--out", f.out, "CSV output path");
    cmd->add_option("--svg", f.svg, "optional SVG plot path");
    cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
}

int run(int argc, char** argv) {
    CLI::App app{"magneto-electric response of two-body bound states"};
    app.require_subcommand(1);

    auto* sweep_cmd = app.add_subcommand("sweep", "frequency sweep to CSV (and optional SVG)");
    SweepFlags sf;
    add_sweep_flags(sweep_cmd, sf);
    sweep_cmd->set_config("--config", "", "flat key = value configuration file");

    auto* beta_cmd = app.add_subcommand("estimate-beta", "dimensionless field-strength factor");
    std::string be0 = "1e5,0,0", bb0 = "0,10,0";
    double bomega0 = 1e16;
    double bm1 = chieb::codata().m_electron, bm2 = chieb::codata().m_proton;
    beta_cmd->add_option("--e0", be0, "static electric field, V/m, as x,y,z");
    beta_cmd->add_option("--b0", bb0, "static magnetic field, T, as x,y,z");
    beta_cmd->add_option("--omega0", bomega0, "binding frequency, rad/s");
    beta_cmd->add_option("--m1", bm1, "mass 1, kg");
    beta_cmd->add_option("--m2", bm2, "mass 2, kg");

    auto* dn_cmd = app.add_subcommand("estimate-dn", "refractive index contrast");
    double density = 0.0, dn_gamma = 1e8;
    int dn_nmax = 20;
    double chi12_override = 0.0;
    bool have_chi12 = false;
    std::string dn_e0 = "1e5,0,0", dn_b0 = "0,10,0";
    dn_cmd->add_option("--density", density, "number density N/V, 1/m^3")->required();
    auto* chi_opt = dn_cmd->add_option("--chi12", chi12_override,
                                       "bi-anisotropic response, C m / T (real part)");
    dn_cmd->add_option("--e0", dn_e0, "fields for the computed default chi12");
    dn_cmd->add_option("--b0", dn_b0, "fields for the computed default chi12");
    dn_cmd->add_option("--gamma", dn_gamma, "line width, rad/s");
    dn_cmd->add_option("--n-max", dn_nmax, "bound-state cutoff");

    auto* validate_cmd = app.add_subcommand("validate", "oracle cross-checks");
    std::string only;
    bool inject_fault = false;
    validate_cmd->add_option("--only", only, "run a single family");
    validate_cmd->add_flag("--inject-fault", inject_fault,
                           "test hook: perturb a reference constant");

    auto* conv_cmd = app.add_subcommand("converge", "chi12 vs bound-state cutoff");
    double conv_omega = 1e14, conv_tol = 1e-3, conv_gamma = 1e8;
    std::string conv_list = "5,10,15,20", conv_e0 = "1e5,0,0", conv_b0 = "0,10,0";
    conv_cmd->add_option("--omega", conv_omega, "frequency, rad/s");
    conv_cmd->add_option("--n-max-list", conv_list, "increasing cutoffs, comma separated");
    conv_cmd->add_option("--tol", conv_tol, "relative tolerance for the last step");
    conv_cmd->add_option("--gamma", conv_gamma, "line width, rad/s");
    conv_cmd->add_option("--e0", conv_e0, "static electric field");
    conv_cmd->add_option("--b0", conv_b0, "static magnetic field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == int(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return kExitConfig;
    }
    have_chi12 = chi_opt->count() > 0;

    if (sweep_cmd->parsed()) {
        const chieb::SweepConfig config = to_config(sf);
        const chieb::SweepResult result = chieb::run_sweep(config);
        chieb::write_csv(result, config.out_path);
        std::printf("wrote %zu rows to %s (V = %g m^3)\n", result.rows.size(),
                    config.out_path.c_str(), result.volume);
        if (!config.svg_path.empty()) {
            chieb::write_svg(result, config.svg_path);
            std::printf("wrote %s\n", config.svg_path.c_str());
        }
        return kExitOk;
    }

    if (beta_cmd->parsed()) {
        const chieb::ParticlePair pair =
            chieb::derive_pair(bm1, bm2, chieb::codata().e_charge);
        chieb::StaticFieldConfig fields{parse_vec3(be0), parse_vec3(bb0)};
        const double beta = chieb::estimate_beta(fields, bomega0, pair);
        std::printf("beta = %.6e\n", beta);
        return kExitOk;
    }

    if (dn_cmd->parsed()) {
        chieb::Complex chi12;
        if (have_chi12) {
            chi12 = chi12_override;
        } else {
            chieb::HydrogenModel model;
            model.fields.E0 = parse_vec3(dn_e0);
            model.fields.B0 = parse_vec3(dn_b0);
            model.gamma = dn_gamma;
            model.n_max = dn_nmax;
            chi12 = chieb::HydrogenResponse(model).chi_total(0.0).entries(0, 1);
            std::printf("chi12(0) = %.6e + %.6ei C m/T\n", chi12.real(), chi12.imag());
        }
        std::printf("delta_n = %.6e\n", chieb::estimate_delta_n(density, chi12));
        return kExitOk;
    }

    if (validate_cmd->parsed()) {
        const auto results = chieb::run_validation({only, inject_fault});
        if (results.empty()) {
            std::fprintf(stderr, "no validation family named '%s'\n", only.c_str());
            return kExitConfig;
        }
        for (const auto& r : results)
            std::printf("[%s] %-16s max rel err %.3e (tol %.0e)  %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.max_rel_err, r.tolerance, r.detail.c_str());
        return chieb::all_passed(results) ? kExitOk : kExitValidation;
    }

    if (conv_cmd->parsed()) {
        chieb::HydrogenModel model;
        model.fields.E0 = parse_vec3(conv_e0);
        model.fields.B0 = parse_vec3(conv_b0);
        model.gamma = conv_gamma;
        const auto report =
            chieb::convergence_report(model, conv_omega, parse_int_list(conv_list), conv_tol);
        std::printf("%6s  %14s  %14s  %12s\n", "n_max", "re_chi12", "im_chi12", "rel_change");
        for (const auto& row : report.rows)
            std::printf("%6d  %14.6e  %14.6e  %12.3e\n", row.n_max, row.chi12.real(),
                        row.chi12.imag(), row.rel_change);
        std::printf("tail %s (tol %.1e)\n", report.flagged ? "NOT CONVERGED" : "converged",
                    report.tol);
        return kExitOk;
    }

    return kExitConfig;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chieb::pole_error& e) {
        std::fprintf(stderr, "pole error: %s\n", e.what());
        return kExitPole;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}
