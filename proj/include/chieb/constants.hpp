#pragma once

#include <numbers>

namespace chieb {

/// Fundamental physical constants in SI units.
///
/// Values follow the 2018 CODATA recommendations, stored with 10
/// significant digits. `h`, `e_charge` and `c_light` are exact by the
/// SI definition; `hbar` is derived from `h` so that no rounding is
/// introduced beyond the table itself.
struct Constants {
    double h = 6.62607015e-34;                    ///< Planck constant, J s (exact)
    double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);  ///< J s
    double e_charge = 1.602176634e-19;            ///< elementary charge, C (exact)
    double eps0 = 8.854187813e-12;                ///< vacuum permittivity, F/m
    double c_light = 2.99792458e8;                ///< speed of light, m/s (exact)
    double m_electron = 9.109383702e-31;          ///< electron mass, kg
    double m_proton = 1.672621924e-27;            ///< proton mass, kg
    double bohr_radius = 5.291772109e-11;         ///< a0, m
    double hartree = 4.359744722e-18;             ///< E_h, J
};

constexpr Constants codata() { return Constants{}; }

} // namespace chieb
