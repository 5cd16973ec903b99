#include "chieb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "chieb/constants.hpp"

namespace chieb::oracle {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigRat pow_rat(const BigRat& base, int e) {
    BigRat out = 1;
    const BigRat b = (e >= 0) ? base : BigRat(1) / base;
    for (int i = 0; i < std::abs(e); ++i) out *= b;
    return out;
}

} // namespace

double radial_eval(int n, int l, double r) {
    // Laguerre polynomial by its explicit series; no shared code with the
    // production radial function.
    const double x = 2.0 * r / n;
    const int k = n - l - 1;
    const int alpha = 2 * l + 1;
    double poly = 0.0;
    for (int i = k; i >= 0; --i) {
        const double coeff = ((i % 2 == 0) ? 1.0 : -1.0) * factorial_d(k + alpha) /
                             (factorial_d(k - i) * factorial_d(alpha + i) * factorial_d(i));
        poly = poly * x + coeff;
    }
    const double norm =
        std::sqrt(std::pow(2.0 / n, 3) * factorial_d(k) / (2.0 * n * factorial_d(n + l)));
    return norm * std::pow(x, l) * std::exp(-0.5 * x) * poly;
}

namespace {

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    const double tmax = 4.0;
    auto eval_point = [&](double t) {
        const double s = std::numbers::pi / 2.0 * std::sinh(t);
        const double x = c + d * std::tanh(s);
        const double w = d * (std::numbers::pi / 2.0) * std::cosh(t) /
                         (std::cosh(s) * std::cosh(s));
        return w > 0.0 && std::isfinite(w) ? w * f(x) : 0.0;
    };
    double h = 1.0;
    double sum = eval_point(0.0);
    for (int k = 1; k * h <= tmax; ++k) sum += eval_point(k * h) + eval_point(-k * h);
    double integral = h * sum;
    for (int level = 0; level < 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval_point(t) + eval_point(-t);
        const double next = 0.5 * integral + h * add;
        if (level > 2 && std::abs(next - integral) <= rel_tol * std::abs(next)) return next;
        integral = next;
    }
    return integral;
}

} // namespace

double quadrature_radial(int n1, int l1, int n2, int l2, int power) {
    if (power < 0 || power > 2)
        throw std::domain_error("quadrature_radial: power must be 0, 1 or 2");
    const double rmax = 2.0 * (double(n1) * n1 + double(n2) * n2) + 10.0 * (n1 + n2) + 20.0;
    auto f = [=](double r) {
        return radial_eval(n1, l1, r) * radial_eval(n2, l2, r) * std::pow(r, power + 2);
    };
    return tanh_sinh(f, 0.0, rmax, 1e-13);
}

// ---------------------------------------------------------------------------
// Sphere quadrature

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

constexpr int kThetaNodes = 48;
constexpr int kPhiNodes = 64;

struct SphereGrid {
    std::vector<double> ct, st, wt; // cos(theta), sin(theta), weights
    std::vector<double> cp, sp;     // cos(phi), sin(phi)

    SphereGrid() {
        std::vector<double> x, w;
        gauss_legendre(kThetaNodes, x, w);
        ct = x;
        wt = w;
        st.resize(kThetaNodes);
        for (int i = 0; i < kThetaNodes; ++i) st[i] = std::sqrt(1.0 - x[i] * x[i]);
        cp.resize(kPhiNodes);
        sp.resize(kPhiNodes);
        for (int p = 0; p < kPhiNodes; ++p) {
            const double phi = 2.0 * std::numbers::pi * p / kPhiNodes;
            cp[p] = std::cos(phi);
            sp[p] = std::sin(phi);
        }
    }
};

const SphereGrid& sphere_grid() {
    static const SphereGrid grid;
    return grid;
}

// theta part of Y_lm (Condon-Shortley included); the e^{i m phi} factor is
// applied by the caller.
double theta_part(int l, int m, double theta) {
    if (m >= 0) return std::sph_legendre(l, m, theta);
    const double v = std::sph_legendre(l, -m, theta);
    return ((-m) % 2 == 0) ? v : -v;
}

} // namespace

Complex angular_quadrature(int la, int ma, int lb, int mb,
                           const std::function<double(double, double, double)>& f) {
    const auto& g = sphere_grid();
    Complex total = 0.0;
    for (int t = 0; t < kThetaNodes; ++t) {
        const double theta = std::acos(g.ct[t]);
        const double ta = theta_part(la, ma, theta);
        const double tb = theta_part(lb, mb, theta);
        Complex phi_sum = 0.0;
        for (int p = 0; p < kPhiNodes; ++p) {
            const double nx = g.st[t] * g.cp[p];
            const double ny = g.st[t] * g.sp[p];
            const double nz = g.ct[t];
            // e^{i (mb - ma) phi}
            const int dm = mb - ma;
            const double ang = dm * 2.0 * std::numbers::pi * p / kPhiNodes;
            phi_sum += Complex(std::cos(ang), std::sin(ang)) * f(nx, ny, nz);
        }
        total += g.wt[t] * ta * tb * phi_sum;
    }
    return total * (2.0 * std::numbers::pi / kPhiNodes);
}

double angular_quadrature_gaunt(int l1, int m1, int L, int M, int l2, int m2) {
    const auto& g = sphere_grid();
    double total = 0.0;
    for (int t = 0; t < kThetaNodes; ++t) {
        const double theta = std::acos(g.ct[t]);
        const double prod = theta_part(l1, m1, theta) * theta_part(L, M, theta) *
                            theta_part(l2, m2, theta);
        // phi integral of e^{i (M + m2 - m1) phi} is 2 pi delta
        total += g.wt[t] * prod;
    }
    if (M + m2 - m1 != 0) return 0.0;
    return total * 2.0 * std::numbers::pi;
}

// ---------------------------------------------------------------------------
// Gordon closed form

double gordon_dipole(int n1, int l1, int n2, int l2) {
    if (std::abs(l1 - l2) != 1) throw std::domain_error("gordon_dipole: need |l1 - l2| = 1");
    if (n1 == n2) throw std::domain_error("gordon_dipole: defined for n1 != n2");
    // (n, l) is the state with the larger l; (np, l-1) the other.
    const int n = (l2 == l1 + 1) ? n2 : n1;
    const int l = std::max(l1, l2);
    const int np = (l2 == l1 + 1) ? n1 : n2;
    if (l > n - 1 || l - 1 > np - 1) throw std::domain_error("gordon_dipole: invalid states");

    const int nr = n - l - 1;
    const int npr = np - l;
    const BigRat x = BigRat(-4 * n * np, BigInt(n - np) * (n - np));
    auto hyper = [&](int a, int bb, int c) {
        // terminating 2F1(a, b; c; x); a is a non-positive integer
        BigRat term = 1, sum = 1;
        for (int s = 0; s < -a; ++s) {
            term *= BigRat(a + s) * BigRat(bb + s) * x / (BigRat(c + s) * BigRat(s + 1));
            sum += term;
        }
        return sum;
    };
    const BigRat f1 = hyper(-nr, -npr, 2 * l);
    const BigRat f2 = hyper(-nr - 2, -npr, 2 * l);
    const BigRat ratio = BigRat(BigInt(n - np) * (n - np), BigInt(n + np) * (n + np));
    const BigRat bracket = f1 - ratio * f2;

    BigRat v = BigRat(1, 4 * factorial_big(2 * l - 1));
    v *= pow_rat(BigRat(4 * n * np), l + 1);
    v *= pow_rat(BigRat(n - np), n + np - 2 * l - 2);
    v /= pow_rat(BigRat(n + np), n + np);
    v *= bracket;

    const BigRat s_rad = BigRat(factorial_big(n + l) * factorial_big(np + l - 1),
                                factorial_big(n - l - 1) * factorial_big(np - l));
    double out = v.convert_to<double>() * std::sqrt(s_rad.convert_to<double>());
    if ((np - l) % 2 != 0) out = -out;
    return out;
}

// ---------------------------------------------------------------------------
// Dense bases

DenseBasis build_fock_basis(const ParticlePair& pair, double omega0_si, int n_cap) {
    if (n_cap < 2) throw std::domain_error("build_fock_basis: n_cap must be >= 2");
    const Constants kc = codata();
    DenseBasis b;
    b.kind = DenseBasis::Kind::fock;
    b.cap = n_cap;
    b.units = AtomicUnits::standard();
    const double m = pair.m / kc.m_electron;
    const double M = pair.M / kc.m_electron;
    const double md = pair.m_delta / kc.m_electron;
    b.e_au = pair.e / kc.e_charge;
    b.c_L = std::pow(b.e_au, 3) * md * md / (m * m * M * M);
    b.c_Q = std::pow(b.e_au, 3) * md * md / (4.0 * m * M * M);
    const double w0 = omega0_si / b.units.frequency;

    for (int total = 0; total <= n_cap; ++total)
        for (int nx = total; nx >= 0; --nx)
            for (int ny = total - nx; ny >= 0; --ny)
                b.states.push_back({nx, ny, total - nx - ny});
    const int N = int(b.states.size());
    std::map<std::array<int, 3>, int> index;
    for (int s = 0; s < N; ++s) index[b.states[s]] = s;

    std::array<Eigen::MatrixXcd, 3> a;
    for (int i = 0; i < 3; ++i) a[i] = Eigen::MatrixXcd::Zero(N, N);
    b.energy.setZero(N);
    for (int s = 0; s < N; ++s) {
        const auto& st = b.states[s];
        b.energy(s) = w0 * (st[0] + st[1] + st[2]);
        for (int i = 0; i < 3; ++i) {
            if (st[i] == 0) continue;
            auto lower = st;
            lower[i] -= 1;
            a[i](index[lower], s) = std::sqrt(double(st[i]));
        }
    }

    const double xi = 1.0 / std::sqrt(2.0 * m * w0);
    for (int i = 0; i < 3; ++i) b.X[i] = xi * (a[i] + a[i].adjoint());
    const Complex im(0.0, 1.0);
    b.L[0] = -im * (a[1].adjoint() * a[2] - a[2].adjoint() * a[1]);
    b.L[1] = -im * (a[2].adjoint() * a[0] - a[0].adjoint() * a[2]);
    b.L[2] = -im * (a[0].adjoint() * a[1] - a[1].adjoint() * a[0]);

    Eigen::MatrixXcd x2 = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i < 3; ++i) x2 += b.X[i] * b.X[i];
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
            b.Q[k][j] = (k == j ? x2 : Eigen::MatrixXcd::Zero(N, N)) - b.X[k] * b.X[j];

    b.ground = index[{0, 0, 0}];
    return b;
}

DenseBasis build_hydrogen_basis(int n_cap, const ParticlePair& pair, bool unit_mass_ratio) {
    if (n_cap < 2) throw std::domain_error("build_hydrogen_basis: n_cap must be >= 2");
    DenseBasis b;
    b.kind = DenseBasis::Kind::hydrogen;
    b.cap = n_cap;
    const double mu = unit_mass_ratio ? 1.0 : pair.reduced_mass_ratio();
    b.units = AtomicUnits::scaled(mu);
    const double asym = pair.asymmetry();
    b.e_au = 1.0;
    b.c_L = unit_mass_ratio ? 1.0 : asym * asym;
    b.c_Q = b.c_L / 4.0;

    for (int n = 1; n <= n_cap; ++n)
        for (int l = 0; l < n; ++l)
            for (int m = -l; m <= l; ++m) {
                b.states.push_back({n, l, m});
                b.l_of.push_back(l);
            }
    const int N = int(b.states.size());
    b.energy.setZero(N);
    for (int s = 0; s < N; ++s)
        b.energy(s) = 0.5 - 0.5 / (double(b.states[s][0]) * b.states[s][0]);
    b.ground = 0;

    for (int i = 0; i < 3; ++i) {
        b.X[i] = Eigen::MatrixXcd::Zero(N, N);
        b.L[i] = Eigen::MatrixXcd::Zero(N, N);
    }
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) b.Q[k][j] = Eigen::MatrixXcd::Zero(N, N);

    for (int sa = 0; sa < N; ++sa)
        for (int sb = 0; sb < N; ++sb) {
            const auto [na, la, ma] = b.states[sa];
            const auto [nb, lb, mb] = b.states[sb];
            if (std::abs(la - lb) == 1 && std::abs(ma - mb) <= 1) {
                const double rad = quadrature_radial(na, la, nb, lb, 1);
                for (int i = 0; i < 3; ++i) {
                    auto f = [i](double nx, double ny, double nz) {
                        return i == 0 ? nx : (i == 1 ? ny : nz);
                    };
                    const Complex ang = angular_quadrature(la, ma, lb, mb, f);
                    if (std::abs(ang) > 1e-14) b.X[i](sa, sb) = rad * ang;
                }
            }
            if (la == lb) {
                const double ov = (na == nb) ? 1.0 : quadrature_radial(na, la, nb, lb, 0);
                if (ma == mb) b.L[2](sa, sb) = double(ma) * ov;
                const double ll = double(la * (la + 1));
                if (ma == mb + 1) {
                    const double c = 0.5 * std::sqrt(ll - double(mb) * (mb + 1));
                    b.L[0](sa, sb) = c * ov;
                    b.L[1](sa, sb) = Complex(0.0, -c) * ov;
                }
                if (ma == mb - 1) {
                    const double c = 0.5 * std::sqrt(ll - double(mb) * (mb - 1));
                    b.L[0](sa, sb) = c * ov;
                    b.L[1](sa, sb) = Complex(0.0, c) * ov;
                }
            }
            if ((la + lb) % 2 == 0 && std::abs(la - lb) <= 2 && std::abs(ma - mb) <= 2) {
                const double rad2 = quadrature_radial(na, la, nb, lb, 2);
                for (int k = 0; k < 3; ++k)
                    for (int j = 0; j < 3; ++j) {
                        auto f = [k, j](double nx, double ny, double nz) {
                            const double nvec[3] = {nx, ny, nz};
                            return (k == j ? 1.0 : 0.0) - nvec[k] * nvec[j];
                        };
                        const Complex ang = angular_quadrature(la, ma, lb, mb, f);
                        if (std::abs(ang) > 1e-14) b.Q[k][j](sa, sb) = rad2 * ang;
                    }
            }
        }
    return b;
}

// ---------------------------------------------------------------------------
// Dense response evaluation

namespace {

// First-order Stark correction vector: |delta> = -e sum_S |S><S| E.X |0> / (E_S - E_0).
Eigen::VectorXcd stark_vector(const DenseBasis& b, const Eigen::Vector3d& E_au) {
    const int N = int(b.states.size());
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(N);
    for (int s = 0; s < N; ++s) {
        if (s == b.ground) continue;
        Complex me = 0.0;
        for (int l = 0; l < 3; ++l)
            if (E_au(l) != 0.0) me += E_au(l) * b.X[l](s, b.ground);
        if (me != Complex(0.0)) d(s) = -b.e_au * me / b.energy(s);
    }
    return d;
}

} // namespace

Matrix3c dense_chi_L_au(const DenseBasis& b, const Eigen::Vector3d& E_au,
                        const Eigen::Vector3d& B_au, double omega_au, double gamma_au) {
    const int N = int(b.states.size());
    const Eigen::VectorXcd delta = stark_vector(b, E_au);
    Eigen::MatrixXcd lb = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k < 3; ++k)
        if (B_au(k) != 0.0) lb += B_au(k) * b.L[k];

    std::vector<Complex> dm(N), dp(N);
    const Complex ig(0.0, gamma_au);
    for (int s = 0; s < N; ++s) {
        dm[s] = 1.0 / (b.energy(s) + ig - omega_au);
        dp[s] = 1.0 / (b.energy(s) + ig + omega_au);
    }

    Matrix3c chi = Matrix3c::Zero();
    for (int j = 0; j < 3; ++j) {
        const Eigen::VectorXcd ljd = b.L[j] * delta; // <N2| L_j |delta>
        for (int i = 0; i < 3; ++i) {
            Complex accm = 0.0, accp = 0.0;
            for (int s1 = 0; s1 < N; ++s1) {
                if (s1 == b.ground) continue;
                const Complex x0 = b.X[i](b.ground, s1); // <0| X_i |N1>
                if (x0 == Complex(0.0)) continue;
                for (int s2 = 0; s2 < N; ++s2) {
                    if (s2 == b.ground) continue;
                    const Complex prod = x0 * lb(s1, s2) * ljd(s2);
                    if (prod == Complex(0.0)) continue;
                    accm += prod * dm[s1] * dm[s2];
                    accp += std::conj(prod) * dp[s1] * dp[s2];
                }
            }
            chi(i, j) = -b.c_L * (accm + accp);
        }
    }
    return chi;
}

Matrix3c dense_chi_quad_au(const DenseBasis& b, const Eigen::Vector3d& E_au,
                           const Eigen::Vector3d& B_au, double omega_au, double gamma_au,
                           QuadOrdering ordering) {
    const int N = int(b.states.size());
    const Eigen::VectorXcd delta = stark_vector(b, E_au);
    const Complex ig(0.0, gamma_au);

    Matrix3c chi = Matrix3c::Zero();
    for (int j = 0; j < 3; ++j) {
        Eigen::MatrixXcd qb = Eigen::MatrixXcd::Zero(N, N);
        for (int k = 0; k < 3; ++k)
            if (B_au(k) != 0.0) qb += B_au(k) * b.Q[k][j];
        const Eigen::VectorXcd qbd = qb * delta; // <N| Qb_j |delta>
        for (int i = 0; i < 3; ++i) {
            // <delta| X_i |N> as a row: conj(delta)^T X_i
            const Eigen::RowVectorXcd dxi = delta.adjoint() * b.X[i];
            Complex accm = 0.0, accp = 0.0;
            for (int s = 0; s < N; ++s) {
                if (s == b.ground) continue;
                if (b.kind == DenseBasis::Kind::hydrogen && b.l_of[s] == 0) continue;
                const Complex t1 = b.X[i](b.ground, s) * qbd(s);
                const Complex t2 = (ordering == QuadOrdering::symmetric)
                                       ? t1
                                       : dxi(s) * qb(s, b.ground);
                const Complex sum = t1 + t2;
                if (sum == Complex(0.0)) continue;
                accm += sum / (b.energy(s) + ig - omega_au);
                accp += std::conj(sum) / (b.energy(s) + ig + omega_au);
            }
            chi(i, j) = b.c_Q * (accm + accp);
        }
    }
    return chi;
}

ResponseTensor dense_chi_L(const DenseBasis& b, const StaticFieldConfig& fields, double omega,
                           double gamma) {
    const Eigen::Vector3d E_au = fields.E0 / b.units.efield;
    const Eigen::Vector3d B_au = fields.B0 / b.units.bfield;
    const Matrix3c chi =
        dense_chi_L_au(b, E_au, B_au, omega / b.units.frequency, gamma / b.units.frequency);
    return ResponseTensor{Matrix3c(chi * b.units.chi_eb), omega};
}

ResponseTensor dense_chi_quad(const DenseBasis& b, const StaticFieldConfig& fields, double omega,
                              double gamma, QuadOrdering ordering) {
    const Eigen::Vector3d E_au = fields.E0 / b.units.efield;
    const Eigen::Vector3d B_au = fields.B0 / b.units.bfield;
    const Matrix3c chi = dense_chi_quad_au(b, E_au, B_au, omega / b.units.frequency,
                                           gamma / b.units.frequency, ordering);
    return ResponseTensor{Matrix3c(chi * b.units.chi_eb), omega};
}

} // namespace chieb::oracle
