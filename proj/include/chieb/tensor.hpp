#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "chieb/constants.hpp"

namespace chieb {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3<Complex>;

/// Complex 3x3 magneto-electric response tensor at one frequency.
/// Entries are in SI units of induced dipole per probe magnetic field
/// (C m / T); index (i, j) couples the dipole component i to the probe
/// field component j. The frequency is carried along so that sweep rows
/// from different grids cannot be mixed up silently.
struct ResponseTensor {
    Matrix3c entries = Matrix3c::Zero();
    double omega = 0.0; ///< rad/s
};

/// Splits into exactly symmetric and exactly antisymmetric parts. The
/// symmetric entry is taken as t_ij - a_ij so that recombining the two
/// parts reproduces the input without rounding residue.
inline std::pair<ResponseTensor, ResponseTensor> split_sym_antisym(const ResponseTensor& t) {
    ResponseTensor sym{Matrix3c::Zero(), t.omega};
    ResponseTensor antisym{Matrix3c::Zero(), t.omega};
    for (int i = 0; i < 3; ++i) {
        sym.entries(i, i) = t.entries(i, i);
        for (int j = i + 1; j < 3; ++j) {
            const Complex a = (t.entries(i, j) - t.entries(j, i)) / 2.0;
            antisym.entries(i, j) = a;
            antisym.entries(j, i) = -a;
            const Complex s = t.entries(i, j) - a;
            sym.entries(i, j) = s;
            sym.entries(j, i) = s;
        }
    }
    return {sym, antisym};
}

/// The bi-anisotropic component: row 1, column 2 (1-based).
inline Complex bianisotropic_12(const ResponseTensor& t) { return t.entries(0, 1); }

/// Entrywise chi / (eps0 c V); `volume` in m^3.
inline Matrix3c dimensionless(const ResponseTensor& t, double volume) {
    if (!(volume > 0.0)) throw std::domain_error("dimensionless: volume must be positive");
    const Constants k = codata();
    return t.entries / (k.eps0 * k.c_light * volume);
}

} // namespace chieb
