#include "chieb/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chieb/errors.hpp"

namespace chieb {

namespace {

// Relative half-width of the guard window around an undamped resonance.
constexpr double kPoleWindow = 1e-9;

Matrix3c conj3(const Matrix3c& m) { return m.conjugate(); }

} // namespace

HydrogenResponse::HydrogenResponse(HydrogenModel model) : model_(std::move(model)) {
    if (model_.gamma < 0.0) throw std::domain_error("HydrogenModel: gamma must be >= 0");
    if (model_.n_max < 2) throw std::domain_error("HydrogenModel: n_max must be >= 2");

    const double mu = model_.unit_mass_ratio ? 1.0 : model_.pair.reduced_mass_ratio();
    units_ = AtomicUnits::scaled(mu);
    const double asym = model_.pair.asymmetry();
    mass_scale_ = model_.unit_mass_ratio ? 1.0 : asym * asym;
    gamma_au_ = model_.gamma / units_.frequency;
    e_au_ = model_.fields.E0 / units_.efield;
    b_au_ = model_.fields.B0 / units_.bfield;
    tables_ = std::make_shared<RadialTables>(model_.n_max);

    rho1_.assign(std::size_t(model_.n_max) + 1, 0.0);
    delta_.assign(std::size_t(model_.n_max) + 1, 0.0);
    for (int n = 2; n <= model_.n_max; ++n) {
        rho1_[n] = tables_->get(1, 0, n, 1, 1);
        delta_[n] = hydrogen_energy(n) - hydrogen_energy(1);
    }

    // Angular weight of the L part: dipole out of the ground state, two
    // angular momentum insertions inside the l = 1 shell, dipole back.
    gl_ = Matrix3c::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double fb = b_au_(k);
                    const double fe = e_au_(l);
                    if (fb == 0.0 || fe == 0.0) continue;
                    for (int m1 = -1; m1 <= 1; ++m1)
                        for (int m2 = -1; m2 <= 1; ++m2)
                            for (int m = -1; m <= 1; ++m) {
                                const Complex t = angular_dipole_factor(i, 0, 0, 1, m1) *
                                                  angular_momentum_matrix(k, 1, m1, m2) *
                                                  angular_momentum_matrix(j, 1, m2, m) *
                                                  angular_dipole_factor(l, 1, m, 0, 0);
                                acc += fb * fe * t;
                            }
                }
            gl_(i, j) = acc;
        }

    // Quadrupole channels over the full stated ranges; only channels with
    // a nonzero angular weight get a radial table.
    for (int L1 = 1; L1 <= 2; ++L1)
        for (int L = 1; L <= 3; ++L) {
            QuadChannel ch;
            ch.resolvent_l = L1;
            ch.static_l = L;
            ch.G = quad_channel_first(L1, L);
            if (!ch.G.isZero(0.0)) {
                ch.rad.setZero(model_.n_max - 1, model_.n_max - 1);
                for (int n1 = std::max(2, L1 + 1); n1 <= model_.n_max; ++n1)
                    for (int n = std::max(2, L + 1); n <= model_.n_max; ++n)
                        ch.rad(n1 - 2, n - 2) = tables_->get(1, 0, n1, L1, 1) *
                                                tables_->get(1, 0, n, L, 1) *
                                                tables_->get(n1, L1, n, L, 2);
                quad_channels_.push_back(std::move(ch));
            }
        }
    for (int L = 1; L <= 3; ++L)
        for (int L1 = 1; L1 <= 2; ++L1) {
            QuadChannel ch;
            ch.resolvent_l = L1;
            ch.static_l = L;
            ch.G = quad_channel_second(L, L1);
            if (!ch.G.isZero(0.0)) {
                ch.rad.setZero(model_.n_max - 1, model_.n_max - 1);
                for (int n1 = std::max(2, L1 + 1); n1 <= model_.n_max; ++n1)
                    for (int n = std::max(2, L + 1); n <= model_.n_max; ++n)
                        ch.rad(n1 - 2, n - 2) = tables_->get(1, 0, n, L, 1) *
                                                tables_->get(n, L, n1, L1, 1) *
                                                tables_->get(n1, L1, 1, 0, 2);
                quad_channels_.push_back(std::move(ch));
            }
        }
}

Matrix3c HydrogenResponse::quad_channel_first(int L1, int L) const {
    Matrix3c g = Matrix3c::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double f = b_au_(k) * e_au_(l);
                    if (f == 0.0) continue;
                    for (int m1 = -L1; m1 <= L1; ++m1)
                        for (int m = -L; m <= L; ++m)
                            acc += f * angular_dipole_factor(i, 0, 0, L1, m1) *
                                   angular_quad_factor(k, j, L1, m1, L, m) *
                                   angular_dipole_factor(l, L, m, 0, 0);
                }
            g(i, j) = acc;
        }
    return g;
}

Matrix3c HydrogenResponse::quad_channel_second(int L, int L1) const {
    Matrix3c g = Matrix3c::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double f = b_au_(k) * e_au_(l);
                    if (f == 0.0) continue;
                    for (int m = -L; m <= L; ++m)
                        for (int m1 = -L1; m1 <= L1; ++m1)
                            acc += f * angular_dipole_factor(l, 0, 0, L, m) *
                                   angular_dipole_factor(i, L, m, L1, m1) *
                                   angular_quad_factor(k, j, L1, m1, 0, 0);
                }
            g(i, j) = acc;
        }
    return g;
}

void HydrogenResponse::check_poles(double omega_au) const {
    if (gamma_au_ > 0.0) return;
    const double w = std::abs(omega_au);
    for (int n = 2; n <= model_.n_max; ++n)
        if (std::abs(delta_[n] - w) < kPoleWindow * delta_[n]) {
            const double omega_si = omega_au * units_.frequency;
            throw pole_error(omega_si, "hydrogen response evaluated at an undamped resonance, "
                                       "omega = " + std::to_string(omega_si) +
                                       " rad/s (n = " + std::to_string(n) + ")");
        }
}

Matrix3c HydrogenResponse::chi_L_au(double omega_au, int n_trunc) const {
    check_poles(omega_au);
    const int top = (n_trunc > 0) ? std::min(n_trunc, model_.n_max) : model_.n_max;
    const Complex ig(0.0, gamma_au_);
    Matrix3c acc = Matrix3c::Zero();
    const Matrix3c glc = conj3(gl_);
    for (int n = 2; n <= top; ++n) {
        const Complex dm = delta_[n] + ig - omega_au;
        const Complex dp = delta_[n] + ig + omega_au;
        const Complex wm = rho1_[n] * rho1_[n] / (dm * dm * delta_[n]);
        const Complex wp = rho1_[n] * rho1_[n] / (dp * dp * delta_[n]);
        acc += wm * gl_ + wp * glc;
    }
    return mass_scale_ * acc;
}

Matrix3c HydrogenResponse::chi_quad_au(double omega_au, int n_trunc) const {
    check_poles(omega_au);
    const int top = (n_trunc > 0) ? std::min(n_trunc, model_.n_max) : model_.n_max;
    const Complex ig(0.0, gamma_au_);
    Matrix3c acc = Matrix3c::Zero();
    for (const auto& ch : quad_channels_) {
        Complex sm = 0.0, sp = 0.0;
        for (int n1 = 2; n1 <= top; ++n1) {
            const Complex dm = delta_[n1] + ig - omega_au;
            const Complex dp = delta_[n1] + ig + omega_au;
            for (int n = 2; n <= top; ++n) {
                const double r = ch.rad(n1 - 2, n - 2);
                if (r == 0.0) continue;
                sm += r / (delta_[n] * dm);
                sp += r / (delta_[n] * dp);
            }
        }
        acc += sm * ch.G + sp * conj3(ch.G);
    }
    return (-mass_scale_ / 4.0) * acc;
}

ResponseTensor HydrogenResponse::chi_L(double omega) const {
    const double w = omega / units_.frequency;
    return ResponseTensor{Matrix3c(chi_L_au(w) * units_.chi_eb), omega};
}

ResponseTensor HydrogenResponse::chi_quad(double omega) const {
    const double w = omega / units_.frequency;
    return ResponseTensor{Matrix3c(chi_quad_au(w) * units_.chi_eb), omega};
}

ResponseTensor HydrogenResponse::chi_total(double omega) const {
    const double w = omega / units_.frequency;
    return ResponseTensor{Matrix3c((chi_L_au(w) + chi_quad_au(w)) * units_.chi_eb), omega};
}

Complex HydrogenResponse::chi12_truncated(double omega, int n_trunc) const {
    const double w = omega / units_.frequency;
    return (chi_L_au(w, n_trunc) + chi_quad_au(w, n_trunc))(0, 1) * units_.chi_eb;
}

PerturbedGround HydrogenResponse::perturbed_ground() const {
    PerturbedGround g;
    g.n_max = model_.n_max;
    g.c.resize(std::size_t(model_.n_max - 1) * 3);
    for (int n = 2; n <= model_.n_max; ++n)
        for (int m = -1; m <= 1; ++m) {
            Complex me = 0.0;
            for (int l = 0; l < 3; ++l)
                if (e_au_(l) != 0.0)
                    me += e_au_(l) * rho1_[n] * angular_dipole_factor(l, 1, m, 0, 0);
            g.c[std::size_t(n - 2) * 3 + std::size_t(m + 1)] = -me / delta_[n];
        }
    return g;
}

PerturbedGround build_perturbed_ground(const HydrogenResponse& h) { return h.perturbed_ground(); }

double bound_polarizability(const RadialTables& tables, int n_max) {
    const double angz = std::abs(angular_dipole_factor(2, 1, 0, 0, 0).real());
    double alpha = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        const double z = tables.get(1, 0, n, 1, 1) * angz;
        alpha += 2.0 * z * z / (hydrogen_energy(n) - hydrogen_energy(1));
    }
    return alpha;
}

ConvergenceReport convergence_report(const HydrogenModel& model, double omega,
                                     const std::vector<int>& n_max_list, double tol) {
    if (n_max_list.empty()) throw std::domain_error("convergence_report: empty n_max list");
    if (!std::is_sorted(n_max_list.begin(), n_max_list.end()) ||
        std::adjacent_find(n_max_list.begin(), n_max_list.end()) != n_max_list.end())
        throw std::domain_error("convergence_report: n_max list must be strictly increasing");
    if (n_max_list.front() < 2) throw std::domain_error("convergence_report: n_max must be >= 2");

    HydrogenModel top = model;
    top.n_max = n_max_list.back();
    const HydrogenResponse h(top);

    ConvergenceReport rep;
    rep.tol = tol;
    for (std::size_t i = 0; i < n_max_list.size(); ++i) {
        ConvergenceRow row;
        row.n_max = n_max_list[i];
        row.chi12 = h.chi12_truncated(omega, n_max_list[i]);
        row.rel_change = 0.0;
        if (i > 0) {
            const double denom = std::abs(row.chi12);
            row.rel_change = denom > 0.0 ? std::abs(row.chi12 - rep.rows[i - 1].chi12) / denom : 0.0;
        }
        rep.rows.push_back(row);
    }
    rep.flagged = rep.rows.size() > 1 && rep.rows.back().rel_change > tol;
    return rep;
}

} // namespace chieb
