#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "chieb/hydrogen_states.hpp"
#include "chieb/tensor.hpp"
#include "chieb/units.hpp"

namespace chieb {

/// Coulomb-bound pair in static bias fields, with a phenomenological
/// line width gamma regularizing the resonances and a principal quantum
/// number cutoff for the bound-state sums.
///
/// With unit_mass_ratio set (the default) the mass asymmetry factor
/// m_delta / M is replaced by 1 and the reduced mass by the electron
/// mass; otherwise the exact two-body values of `pair` are used. The
/// charge magnitude is taken as elementary.
struct HydrogenModel {
    ParticlePair pair = electron_proton_pair();
    bool unit_mass_ratio = true;
    StaticFieldConfig fields;
    double gamma = 0.0; ///< rad/s
    int n_max = 20;
};

/// First-order Stark dressing of the ground state: one complex amplitude
/// per (n, l=1, m) with 2 <= n <= n_max, m in {-1, 0, 1}. Amplitudes are
/// dimensionless (the static field is folded in).
struct PerturbedGround {
    int n_max = 0;
    std::vector<Complex> c;

    Complex coeff(int n, int m) const { return c.at(std::size_t(n - 2) * 3 + std::size_t(m + 1)); }
};

struct ConvergenceRow {
    int n_max;
    Complex chi12;       ///< SI, C m / T
    double rel_change;   ///< relative to the previous row (0 for the first)
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double tol = 0.0;
    bool flagged = false; ///< last two rows differ by more than tol
};

/// Prepared hydrogen response: radial integrals and angular channel
/// weights are cached at construction; afterwards every evaluation is a
/// pure function of the frequency, safe to call concurrently.
class HydrogenResponse {
  public:
    explicit HydrogenResponse(HydrogenModel model);

    const HydrogenModel& model() const { return model_; }
    const RadialTables& tables() const { return *tables_; }
    const AtomicUnits& units() const { return units_; }

    /// Angular-momentum coupling part, omega in rad/s.
    ResponseTensor chi_L(double omega) const;
    /// Quadrupole coupling part.
    ResponseTensor chi_quad(double omega) const;
    /// Sum of the two parts.
    ResponseTensor chi_total(double omega) const;

    /// chi_total entry (1,2) with both principal sums truncated at n_trunc.
    Complex chi12_truncated(double omega, int n_trunc) const;

    PerturbedGround perturbed_ground() const;

    // Atomic-unit evaluators (n_trunc = 0 means the full n_max).
    Matrix3c chi_L_au(double omega_au, int n_trunc = 0) const;
    Matrix3c chi_quad_au(double omega_au, int n_trunc = 0) const;

    /// Angular weight of one quadrupole channel of the first insertion
    /// ordering (resolvent state l = L1, statically mixed state l = L).
    /// Only (L1, L) = (1, 1) is nonzero; the tests document this.
    Matrix3c quad_channel_first(int L1, int L) const;
    /// Second ordering (statically mixed l = L, resolvent l = L1); only
    /// (L, L1) = (1, 2) is nonzero.
    Matrix3c quad_channel_second(int L, int L1) const;

  private:
    struct QuadChannel {
        int resolvent_l;        // l of the state carrying the frequency denominator
        int static_l;           // l of the statically mixed state
        Matrix3c G;             // angular weight contracted with the bias fields
        Eigen::MatrixXd rad;    // rad(n1 - 2, n - 2), resolvent index first
    };

    void check_poles(double omega_au) const;

    HydrogenModel model_;
    AtomicUnits units_;
    double mass_scale_;
    double gamma_au_;
    Eigen::Vector3d e_au_, b_au_;
    std::shared_ptr<RadialTables> tables_;
    std::vector<double> rho1_;   // <1 0|r|n 1>, index n
    std::vector<double> delta_;  // E_n - E_1, index n
    Matrix3c gl_;                // angular weight of the L part
    std::vector<QuadChannel> quad_channels_;
};

PerturbedGround build_perturbed_ground(const HydrogenResponse& h);

/// Bound-state part of the static dipole polarizability alpha/(4 pi eps0)
/// in a0^3, summed up to n_max.
double bound_polarizability(const RadialTables& tables, int n_max);

ConvergenceReport convergence_report(const HydrogenModel& model, double omega,
                                     const std::vector<int>& n_max_list, double tol = 1e-3);

} // namespace chieb
