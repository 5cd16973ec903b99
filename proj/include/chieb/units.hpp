#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "chieb/constants.hpp"

namespace chieb {

enum class Unit { length, energy, frequency, efield, bfield };

/// Maps the textual unit kinds accepted on the command line onto Unit.
inline Unit parse_unit(std::string_view kind) {
    if (kind == "length") return Unit::length;
    if (kind == "energy") return Unit::energy;
    if (kind == "frequency") return Unit::frequency;
    if (kind == "efield") return Unit::efield;
    if (kind == "bfield") return Unit::bfield;
    throw std::domain_error("unknown unit kind: " + std::string(kind));
}

/// Conversion factors between SI and atomic units: each member is the SI
/// value of one atomic unit of that quantity.
///
/// `scaled(mu)` yields the unit system of a bound pair whose reduced mass
/// is `mu` electron masses (hbar = e = m_reduced = 4 pi eps0 = 1). With
/// mu = 1 this is the standard electron-mass system.
struct AtomicUnits {
    double length;     ///< m per a0
    double energy;     ///< J per hartree
    double frequency;  ///< (rad/s) per atomic frequency unit
    double efield;     ///< (V/m) per atomic field unit
    double bfield;     ///< T per atomic field unit
    double chi_eb;     ///< (C m / T) per atomic unit of the EB response

    static AtomicUnits scaled(double mu) {
        const Constants k = codata();
        AtomicUnits u;
        u.length = k.bohr_radius / mu;
        u.energy = k.hartree * mu;
        u.frequency = u.energy / k.hbar;
        u.efield = u.energy / (k.e_charge * u.length);
        u.bfield = k.hbar / (k.e_charge * u.length * u.length);
        // induced dipole (e * length) per magnetic field unit
        u.chi_eb = k.e_charge * u.length / u.bfield;
        return u;
    }

    static AtomicUnits standard() { return scaled(1.0); }

    double si_per_au(Unit kind) const {
        switch (kind) {
            case Unit::length: return length;
            case Unit::energy: return energy;
            case Unit::frequency: return frequency;
            case Unit::efield: return efield;
            case Unit::bfield: return bfield;
        }
        throw std::domain_error("unknown unit kind");
    }
};

/// SI value -> standard atomic units.
inline double to_atomic(double value, Unit kind) {
    return value / AtomicUnits::standard().si_per_au(kind);
}

/// Standard atomic units -> SI value.
inline double from_atomic(double value, Unit kind) {
    return value * AtomicUnits::standard().si_per_au(kind);
}

/// Two-body system of equal and opposite charges. Stores the masses and
/// charge magnitude together with the derived total, reduced and
/// difference masses used throughout the response prefactors.
struct ParticlePair {
    double m1 = 0.0;      ///< kg
    double m2 = 0.0;      ///< kg
    double e = 0.0;       ///< charge magnitude, C
    double M = 0.0;       ///< m1 + m2
    double m = 0.0;       ///< reduced mass m1 m2 / M
    double m_delta = 0.0; ///< m2 - m1

    /// m_delta / M, the asymmetry factor the response is proportional to.
    double asymmetry() const { return m_delta / M; }

    /// Reduced mass in electron masses.
    double reduced_mass_ratio() const { return m / codata().m_electron; }
};

inline ParticlePair derive_pair(double m1, double m2, double e) {
    if (!(m1 > 0.0) || !(m2 > 0.0) || !(e > 0.0))
        throw std::domain_error("derive_pair: masses and charge must be positive");
    ParticlePair p;
    p.m1 = m1;
    p.m2 = m2;
    p.e = e;
    p.M = m1 + m2;
    p.m = m1 * m2 / p.M;
    p.m_delta = m2 - m1;
    return p;
}

inline ParticlePair electron_proton_pair() {
    const Constants k = codata();
    return derive_pair(k.m_electron, k.m_proton, k.e_charge);
}

/// Static bias fields in SI units.
struct StaticFieldConfig {
    Eigen::Vector3d E0 = Eigen::Vector3d::Zero(); ///< V/m
    Eigen::Vector3d B0 = Eigen::Vector3d::Zero(); ///< T
};

} // namespace chieb
