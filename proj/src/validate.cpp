#include "chieb/validate.hpp"

#include <cmath>
#include <random>

#include "chieb/ho.hpp"
#include "chieb/hydrogen.hpp"
#include "chieb/hydrogen_states.hpp"
#include "chieb/oracle.hpp"
#include "chieb/units.hpp"

namespace chieb {

namespace {

double rel_err(const Matrix3c& a, const Matrix3c& b) {
    const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
    if (scale == 0.0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

CheckResult check_ho_oracle() {
    CheckResult r{"ho-oracle", 0.0, 1e-8, false, ""};
    const ParticlePair pair = electron_proton_pair();
    const double omega0 = 1e16;
    StaticFieldConfig fields;
    fields.E0 = Eigen::Vector3d(1e5, 2e4, -3e4);
    fields.B0 = Eigen::Vector3d(4.0, 10.0, 6.0);
    const HOModel model{pair, omega0, fields};
    const auto basis = oracle::build_fock_basis(pair, omega0, 6);

    for (int i = 0; i < 20; ++i) {
        const double w = std::pow(10.0, 13.0 + 6.0 * i / 19.0);
        if (std::abs(w - omega0) < 0.05 * omega0) continue;
        const auto l_main = ho_chi_L(model, w);
        const auto l_dense = oracle::dense_chi_L(basis, fields, w, 0.0);
        r.max_rel_err = std::max(r.max_rel_err, rel_err(l_main.entries, l_dense.entries));
        const auto q_main = ho_chi_quad(model, w);
        const auto q_dense =
            oracle::dense_chi_quad(basis, fields, w, 0.0, oracle::QuadOrdering::symmetric);
        r.max_rel_err = std::max(r.max_rel_err, rel_err(q_main.entries, q_dense.entries));
        const auto t_main = ho_chi_total(model, w);
        const auto t_direct = ho_chi_total_direct(model, w);
        r.max_rel_err = std::max(r.max_rel_err, rel_err(t_main.entries, t_direct.entries));
    }
    r.pass = r.max_rel_err <= r.tolerance;
    r.detail = "closed forms vs dense number-state evaluation, N_cap = 6";
    return r;
}

CheckResult check_hydrogen_oracle() {
    CheckResult r{"hydrogen-oracle", 0.0, 1e-10, false, ""};
    HydrogenModel model;
    model.fields.E0 = Eigen::Vector3d(1e5, 0.0, 0.0);
    model.fields.B0 = Eigen::Vector3d(0.0, 10.0, 0.0);
    model.gamma = 1e8;
    model.n_max = 4;
    const HydrogenResponse h(model);
    const auto basis = oracle::build_hydrogen_basis(4, model.pair, true);

    std::mt19937 rng(20240911u);
    std::uniform_real_distribution<double> dist(13.5, 17.0);
    std::vector<double> freqs;
    for (int i = 0; i < 19; ++i) freqs.push_back(std::pow(10.0, dist(rng)));
    // one point close to the first resonance
    freqs.push_back(0.375 * AtomicUnits::standard().frequency * (1.0 + 1e-5));

    for (const double w : freqs) {
        const auto l_main = h.chi_L(w);
        const auto l_dense = oracle::dense_chi_L(basis, model.fields, w, model.gamma);
        r.max_rel_err = std::max(r.max_rel_err, rel_err(l_main.entries, l_dense.entries));
        const auto q_main = h.chi_quad(w);
        const auto q_dense = oracle::dense_chi_quad(basis, model.fields, w, model.gamma,
                                                    oracle::QuadOrdering::distinct);
        r.max_rel_err = std::max(r.max_rel_err, rel_err(q_main.entries, q_dense.entries));
    }
    r.pass = r.max_rel_err <= r.tolerance;
    r.detail = "summed response vs dense bound-state evaluation, n_max = 4";
    return r;
}

CheckResult check_radial_gordon(bool inject_fault) {
    CheckResult r{"radial-gordon", 0.0, 1e-8, false, ""};
    const double fault = inject_fault ? 1.0 + 1e-6 : 1.0;
    for (int n1 = 1; n1 <= 10; ++n1)
        for (int n2 = n1 + 1; n2 <= 10; ++n2)
            for (int l1 = 0; l1 < n1; ++l1)
                for (const int l2 : {l1 - 1, l1 + 1}) {
                    if (l2 < 0 || l2 > n2 - 1) continue;
                    const double quad = radial_integral(n1, l1, n2, l2, 1);
                    const double closed = oracle::gordon_dipole(n1, l1, n2, l2) * fault;
                    const double denom = std::max(std::abs(quad), std::abs(closed));
                    if (denom > 0.0)
                        r.max_rel_err = std::max(r.max_rel_err, std::abs(quad - closed) / denom);
                }

    // pinned values: <r>_1s, <1s|r|2p>, <r^2>_1s, <r^2>_2p
    const struct {
        int n1, l1, n2, l2, p;
        double expect;
    } pinned[] = {
        {1, 0, 1, 0, 1, 1.5},
        {1, 0, 2, 1, 1, 128.0 * std::sqrt(6.0) / 243.0},
        {1, 0, 1, 0, 2, 3.0},
        {2, 1, 2, 1, 2, 30.0},
    };
    for (const auto& c : pinned) {
        const double quad = radial_integral(c.n1, c.l1, c.n2, c.l2, c.p);
        const double alt = oracle::quadrature_radial(c.n1, c.l1, c.n2, c.l2, c.p);
        r.max_rel_err = std::max(r.max_rel_err, std::abs(quad - c.expect) / std::abs(c.expect));
        r.max_rel_err = std::max(r.max_rel_err, std::abs(alt - c.expect) / std::abs(c.expect));
    }
    r.pass = r.max_rel_err <= r.tolerance;
    r.detail = "dipole radial integrals, quadrature vs closed form, n <= 10";
    return r;
}

CheckResult check_gaunt_angular() {
    CheckResult r{"gaunt-angular", 0.0, 1e-12, false, ""};
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2)
            for (int L = 0; L <= 2; ++L)
                for (int m1 = -l1; m1 <= l1; ++m1)
                    for (int m2 = -l2; m2 <= l2; ++m2)
                        for (int M = -L; M <= L; ++M) {
                            const double exact = gaunt(l1, m1, L, M, l2, m2);
                            const double quad =
                                oracle::angular_quadrature_gaunt(l1, m1, L, M, l2, m2);
                            r.max_rel_err = std::max(r.max_rel_err, std::abs(exact - quad));
                        }
    r.pass = r.max_rel_err <= r.tolerance;
    r.detail = "exact Gaunt coefficients vs sphere quadrature (absolute error)";
    return r;
}

CheckResult check_units() {
    CheckResult r{"units", 0.0, 1e-9, false, ""};
    const Constants k = codata();
    const double a0_derived =
        4.0 * 3.14159265358979323846 * k.eps0 * k.hbar * k.hbar / (k.m_electron * k.e_charge * k.e_charge);
    r.max_rel_err = std::abs(a0_derived - k.bohr_radius) / k.bohr_radius;
    const double hartree_derived =
        k.e_charge * k.e_charge / (4.0 * 3.14159265358979323846 * k.eps0 * k.bohr_radius);
    r.max_rel_err =
        std::max(r.max_rel_err, std::abs(hartree_derived - k.hartree) / k.hartree);
    for (const Unit u : {Unit::length, Unit::energy, Unit::frequency, Unit::efield, Unit::bfield}) {
        const double x = 3.718;
        r.max_rel_err = std::max(
            r.max_rel_err, std::abs(from_atomic(to_atomic(x, u), u) - x) / x);
    }
    r.pass = r.max_rel_err <= r.tolerance;
    r.detail = "constants cross-consistency and unit round-trips";
    return r;
}

} // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& opts) {
    std::vector<CheckResult> out;
    auto want = [&](const char* name) { return opts.only.empty() || opts.only == name; };
    if (want("units")) out.push_back(check_units());
    if (want("gaunt-angular")) out.push_back(check_gaunt_angular());
    if (want("radial-gordon")) out.push_back(check_radial_gordon(opts.inject_fault));
    if (want("ho-oracle")) out.push_back(check_ho_oracle());
    if (want("hydrogen-oracle")) out.push_back(check_hydrogen_oracle());
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

} // namespace chieb
