#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "chieb/tensor.hpp"
#include "chieb/units.hpp"

namespace chieb::oracle {

// Everything in this namespace is a validation path: dense matrices,
// explicit loops, no caching, and no code shared with the production
// sums. Radial integrals use tanh-sinh quadrature with its own radial
// wavefunction evaluation; angular integrals use a 2D sphere quadrature.

/// Radial wavefunction evaluated from the explicit Laguerre series.
double radial_eval(int n, int l, double r);

/// <n1 l1 | r^power | n2 l2> by tanh-sinh quadrature, power in {0, 1, 2}.
double quadrature_radial(int n1, int l1, int n2, int l2, int power);

/// int Y*_{l1 m1} Y_{L M} Y_{l2 m2} dOmega by Gauss-Legendre x uniform-phi
/// sphere quadrature.
double angular_quadrature_gaunt(int l1, int m1, int L, int M, int l2, int m2);

/// <a| f(n_hat) |b> over the sphere for an arbitrary direction function,
/// same quadrature as angular_quadrature_gaunt.
Complex angular_quadrature(int la, int ma, int lb, int mb,
                           const std::function<double(double, double, double)>& f);

/// Closed-form dipole radial integral <n1 l1 | r | n2 l2> for n1 != n2 and
/// |l1 - l2| = 1, evaluated in exact rational arithmetic.
double gordon_dipole(int n1, int l1, int n2, int l2);

/// Finite basis with dense operator matrices. Built either from harmonic
/// oscillator number states (total excitation <= cap) or from hydrogen
/// bound states (n <= cap).
struct DenseBasis {
    enum class Kind { fock, hydrogen };

    Kind kind;
    int cap = 0;
    std::vector<std::array<int, 3>> states; ///< fock: (nx,ny,nz); hydrogen: (n,l,m)
    std::vector<int> l_of;                  ///< hydrogen only: orbital quantum number
    Eigen::VectorXd energy;                 ///< E - E_ground, atomic units
    std::array<Eigen::MatrixXcd, 3> X;      ///< position operators
    std::array<Eigen::MatrixXcd, 3> L;      ///< angular momentum operators
    std::array<std::array<Eigen::MatrixXcd, 3>, 3> Q; ///< x^2 delta_kj - x_k x_j
    double e_au = 1.0;                      ///< charge in atomic units
    double c_L = 1.0;                       ///< angular-momentum response constant
    double c_Q = 1.0;                       ///< quadrupole response constant
    AtomicUnits units = AtomicUnits::standard();
    int ground = 0;
};

DenseBasis build_fock_basis(const ParticlePair& pair, double omega0_si, int n_cap);
DenseBasis build_hydrogen_basis(int n_cap, const ParticlePair& pair, bool unit_mass_ratio = true);

/// How the two insertion orderings of the quadrupole sum are combined:
/// `symmetric` doubles the first ordering (the oscillator closed form has
/// a single resonance), `distinct` keeps the second ordering as written
/// with the resolvent restricted to l >= 1 intermediates.
enum class QuadOrdering { symmetric, distinct };

Matrix3c dense_chi_L_au(const DenseBasis& basis, const Eigen::Vector3d& E_au,
                        const Eigen::Vector3d& B_au, double omega_au, double gamma_au);
Matrix3c dense_chi_quad_au(const DenseBasis& basis, const Eigen::Vector3d& E_au,
                           const Eigen::Vector3d& B_au, double omega_au, double gamma_au,
                           QuadOrdering ordering);

/// SI wrappers; omega and gamma in rad/s, fields in V/m and T.
ResponseTensor dense_chi_L(const DenseBasis& basis, const StaticFieldConfig& fields, double omega,
                           double gamma);
ResponseTensor dense_chi_quad(const DenseBasis& basis, const StaticFieldConfig& fields,
                              double omega, double gamma, QuadOrdering ordering);

} // namespace chieb::oracle
