#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "chieb/errors.hpp"
#include "chieb/tensor.hpp"
#include "chieb/units.hpp"

namespace chieb {

/// Isotropic harmonic binding potential V(x) = m w0^2 x^2 / 2 in static
/// bias fields. The magneto-electric response of this model is known in
/// closed form; see ho_chi_L / ho_chi_quad / ho_chi_total.
struct HOModel {
    ParticlePair pair;
    double omega0 = 0.0; ///< trap frequency, rad/s
    StaticFieldConfig fields;
};

namespace detail {

struct HOAtomic {
    double omega0;            // trap frequency, atomic units
    double prefactor;         // e^4 mdelta^2 / (w0^2 m^3 M^2), atomic units
    Eigen::Vector3d E, B;     // fields, atomic units
    AtomicUnits units;
};

inline HOAtomic ho_to_atomic(const HOModel& model) {
    if (!(model.omega0 > 0.0)) throw std::domain_error("HOModel: omega0 must be positive");
    const Constants k = codata();
    HOAtomic a;
    a.units = AtomicUnits::standard();
    a.omega0 = model.omega0 / a.units.frequency;
    const double m = model.pair.m / k.m_electron;
    const double M = model.pair.M / k.m_electron;
    const double md = model.pair.m_delta / k.m_electron;
    const double e = model.pair.e / k.e_charge;
    a.prefactor = std::pow(e, 4) * md * md / (a.omega0 * a.omega0 * m * m * m * M * M);
    a.E = model.fields.E0 / a.units.efield;
    a.B = model.fields.B0 / a.units.bfield;
    return a;
}

// Numeric guard around the undamped resonance, |w^2 - w0^2| < 1e-9 w0^2
// in atomic units.
inline void ho_check_pole(const HOAtomic& a, double omega_au, double omega_si) {
    const double w02 = a.omega0 * a.omega0;
    if (std::abs(omega_au * omega_au - w02) < 1e-9 * w02)
        throw pole_error(omega_si, "harmonic-oscillator response evaluated at resonance, omega = " +
                                       std::to_string(omega_si) + " rad/s");
}

inline ResponseTensor ho_wrap(const HOAtomic& a, const Matrix3c& chi_au, double omega_si) {
    return ResponseTensor{Matrix3c(chi_au * a.units.chi_eb), omega_si};
}

} // namespace detail

/// Angular-momentum coupling part of the oscillator response.
inline ResponseTensor ho_chi_L(const HOModel& model, double omega) {
    const auto a = detail::ho_to_atomic(model);
    const double w = omega / a.units.frequency;
    detail::ho_check_pole(a, w, omega);
    const double w02 = a.omega0 * a.omega0;
    const double freq = (w * w + w02) / ((w02 - w * w) * (w02 - w * w));
    Matrix3c chi = Matrix3c::Zero();
    const double eb = a.E.dot(a.B);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            chi(i, j) = a.prefactor * freq * (a.E(i) * a.B(j) - (i == j ? eb : 0.0));
    return detail::ho_wrap(a, chi, omega);
}

/// Quadrupole coupling part of the oscillator response.
inline ResponseTensor ho_chi_quad(const HOModel& model, double omega) {
    const auto a = detail::ho_to_atomic(model);
    const double w = omega / a.units.frequency;
    detail::ho_check_pole(a, w, omega);
    const double w02 = a.omega0 * a.omega0;
    const double freq = 1.0 / (w02 - w * w);
    Matrix3c chi = Matrix3c::Zero();
    const double eb = a.E.dot(a.B);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            chi(i, j) = -(a.prefactor / 4.0) * freq *
                        (4.0 * a.E(i) * a.B(j) - a.E(j) * a.B(i) - (i == j ? eb : 0.0));
    return detail::ho_wrap(a, chi, omega);
}

/// Full oscillator response as the sum of the two parts.
inline ResponseTensor ho_chi_total(const HOModel& model, double omega) {
    ResponseTensor l = ho_chi_L(model, omega);
    ResponseTensor q = ho_chi_quad(model, omega);
    return ResponseTensor{Matrix3c(l.entries + q.entries), omega};
}

/// Full oscillator response transcribed as a single expression rather
/// than part-wise. Kept separate from ho_chi_total on purpose: the two
/// routes are compared in the tests to guard the sign bookkeeping.
inline ResponseTensor ho_chi_total_direct(const HOModel& model, double omega) {
    const auto a = detail::ho_to_atomic(model);
    const double w = omega / a.units.frequency;
    detail::ho_check_pole(a, w, omega);
    const double w02 = a.omega0 * a.omega0;
    const double fL = (w * w + w02) / ((w02 - w * w) * (w02 - w * w));
    const double fQ = 1.0 / (w02 - w * w);
    Matrix3c chi = Matrix3c::Zero();
    const double eb = a.E.dot(a.B);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            chi(i, j) = -a.prefactor *
                        (-fL * (a.E(i) * a.B(j) - eb * d) +
                         fQ * (a.E(i) * a.B(j) - 0.25 * a.E(j) * a.B(i) - 0.25 * eb * d));
        }
    return detail::ho_wrap(a, chi, omega);
}

} // namespace chieb
