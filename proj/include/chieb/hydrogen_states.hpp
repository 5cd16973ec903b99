#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "chieb/tensor.hpp"

namespace chieb {

/// Hydrogen bound-state label. Construction enforces n >= 1,
/// 0 <= l <= n-1, |m| <= l.
struct HState {
    int n, l, m;

    HState(int n_, int l_, int m_);
};

/// Bound-state energy E_n = -1/(2 n^2) in atomic units.
double hydrogen_energy(int n);

/// Normalized radial wavefunction R_nl(r), r in a0, result in a0^{-3/2}.
/// Positive near the origin (Condon-Shortley lives in the angular part).
double radial_wavefunction(int n, int l, double r);

/// Radial integral <n1 l1 | r^power | n2 l2> = int R1 r^power R2 r^2 dr,
/// power in {0, 1, 2}, via adaptive Gauss-Kronrod quadrature on
/// [0, 40 max(n1,n2)^2] with 1e-12 relative tolerance.
double radial_integral(int n1, int l1, int n2, int l2, int power);

/// Gaunt coefficient int Y*_{l1 m1} Y_{L M} Y_{l2 m2} dOmega, evaluated
/// from the Racah 3j closed form in exact rational arithmetic and
/// converted to double at the end. Selection-rule violations give an
/// exact 0.0, not an error.
double gaunt(int l1, int m1, int L, int M, int l2, int m2);

/// Wigner 3j symbol, same exact evaluation path as gaunt.
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

// Spherical-to-Cartesian operator tables. x_i = r * sum_q U[i][q] C^1_q and
// n_k n_j = delta_kj / 3 + sum_q W[k][j][q] C^2_q with Racah-normalized
// C^L_q = sqrt(4 pi / (2L+1)) Y_{Lq}.

/// Angular factor of <l_a m_a| x_axis / r |l_b m_b>.
Complex angular_dipole_factor(int axis, int la, int ma, int lb, int mb);

/// Angular factor of <l_a m_a| delta_kj - n_k n_j |l_b m_b>; multiplied by
/// the r^2 radial integral this is the quadrupole coupling element.
Complex angular_quad_factor(int k, int j, int la, int ma, int lb, int mb);

/// <l m1 | L_axis | l m2> in units of hbar (ladder algebra).
Complex angular_momentum_matrix(int axis, int l, int m1, int m2);

/// Cache of radial integrals keyed on quantum numbers, warmed over the
/// channels the response sums touch for principal quantum numbers up to
/// n_max. Read-only after construction; lookups outside the warmed set
/// fall back to direct quadrature without mutating the cache.
class RadialTables {
  public:
    explicit RadialTables(int n_max);

    int n_max() const { return n_max_; }

    /// Cached (or directly computed) <n1 l1 | r^power | n2 l2>, power in {1,2}.
    double get(int n1, int l1, int n2, int l2, int power) const;

    /// Same-l radial overlap int R_{n1 l} R_{n2 l} r^2 dr (1 for n1 == n2).
    double overlap(int n1, int n2, int l) const;

    std::size_t size() const { return cache_.size(); }

    /// Text dump, one "n1 l1 n2 l2 power value" record per line under a
    /// version header. Values use shortest round-trip formatting.
    void save(const std::filesystem::path& p) const;

    /// Replaces the cache with the records of a dump written by save().
    void load(const std::filesystem::path& p);

  private:
    using Key = std::tuple<int, int, int, int, int>;
    static Key make_key(int n1, int l1, int n2, int l2, int power);

    int n_max_;
    std::map<Key, double> cache_;
};

/// <a| x_axis |b> in a0 (axis 0,1,2 = x,y,z).
Complex position_element(const HState& a, int axis, const HState& b,
                         const RadialTables* tables = nullptr);

/// <a| L_axis |b> in hbar. Zero between different l by construction; the
/// same-l different-n radial overlap is computed, not assumed zero.
Complex angular_momentum_element(const HState& a, int axis, const HState& b);

/// <a| x^2 delta_kj - x_k x_j |b> in a0^2.
Complex quadrupole_element(const HState& a, int k, int j, const HState& b,
                           const RadialTables* tables = nullptr);

namespace quadrature {
/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to the
/// given relative tolerance.
double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double rel_tol);
} // namespace quadrature

} // namespace chieb
