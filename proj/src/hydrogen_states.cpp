#include "chieb/hydrogen_states.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace chieb {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial_big(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// sign * sqrt(radicand), kept exact until the final conversion.
struct ExactRoot {
    int sign = 0;
    BigRat radicand = 0;

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::sqrt(radicand.convert_to<double>());
    }
};

ExactRoot root_times(const ExactRoot& a, const ExactRoot& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.sign * b.sign, a.radicand * b.radicand};
}

// Racah's closed form. All arithmetic over exact rationals; the result is
// a rational multiple of the square root of a rational.
ExactRoot wigner3j_exact(int j1, int j2, int j3, int m1, int m2, int m3) {
    if (m1 + m2 + m3 != 0) return {};
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return {};
    if (j3 < std::abs(j1 - j2) || j3 > j1 + j2) return {};

    const BigRat delta = BigRat(factorial_big(j1 + j2 - j3) * factorial_big(j1 - j2 + j3) *
                                    factorial_big(-j1 + j2 + j3),
                                factorial_big(j1 + j2 + j3 + 1));
    const BigInt mfac = factorial_big(j1 + m1) * factorial_big(j1 - m1) *
                        factorial_big(j2 + m2) * factorial_big(j2 - m2) *
                        factorial_big(j3 + m3) * factorial_big(j3 - m3);

    const int kmin = std::max({0, j2 - j3 - m1, j1 - j3 + m2});
    const int kmax = std::min({j1 + j2 - j3, j1 - m1, j2 + m2});
    BigRat sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        const BigInt den = factorial_big(k) * factorial_big(j1 + j2 - j3 - k) *
                           factorial_big(j1 - m1 - k) * factorial_big(j2 + m2 - k) *
                           factorial_big(j3 - j2 + m1 + k) * factorial_big(j3 - j1 - m2 + k);
        const BigRat term = BigRat(1, den);
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum == 0) return {};

    int sign = (sum > 0) ? 1 : -1;
    if ((j1 - j2 - m3) % 2 != 0) sign = -sign;
    return {sign, sum * sum * delta * BigRat(mfac)};
}

constexpr double kFourPi = 4.0 * std::numbers::pi;

} // namespace

double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3) {
    return wigner3j_exact(j1, j2, j3, m1, m2, m3).value();
}

double gaunt(int l1, int m1, int L, int M, int l2, int m2) {
    if (l1 < 0 || L < 0 || l2 < 0) return 0.0;
    const ExactRoot zero3j = wigner3j_exact(l1, L, l2, 0, 0, 0);
    const ExactRoot m3j = wigner3j_exact(l1, L, l2, -m1, M, m2);
    ExactRoot prod = root_times(zero3j, m3j);
    if (prod.sign == 0) return 0.0;
    prod.radicand *= BigRat((2 * l1 + 1) * (2 * L + 1) * (2 * l2 + 1));
    if (m1 % 2 != 0) prod.sign = -prod.sign;
    return prod.value() / std::sqrt(kFourPi);
}

// ---------------------------------------------------------------------------
// Radial functions and quadrature

HState::HState(int n_, int l_, int m_) : n(n_), l(l_), m(m_) {
    if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l)
        throw std::domain_error("HState: invalid quantum numbers");
}

double hydrogen_energy(int n) {
    if (n < 1) throw std::domain_error("hydrogen_energy: n must be >= 1");
    return -0.5 / (double(n) * double(n));
}

double radial_wavefunction(int n, int l, double r) {
    if (n < 1 || l < 0 || l > n - 1)
        throw std::domain_error("radial_wavefunction: invalid quantum numbers");
    if (r < 0.0) throw std::domain_error("radial_wavefunction: r must be >= 0");
    const double x = 2.0 * r / n;
    const double norm = std::pow(2.0 / n, 1.5) *
                        std::exp(0.5 * (std::lgamma(n - l) - std::lgamma(n + l + 1) -
                                        std::log(2.0 * n)));
    return norm * std::pow(x, l) * std::exp(-0.5 * x) * std::assoc_laguerre(n - l - 1, 2 * l + 1, x);
}

namespace quadrature {

namespace {
// Kronrod-15 abscissae and weights on [-1, 1]; the embedded Gauss-7 rule
// uses the odd-indexed points.
constexpr std::array<double, 8> kKx = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr std::array<double, 8> kKw = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kGw = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

void gk15(const std::function<double(double)>& f, double a, double b, double& k15, double& g7) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    k15 = 0.0;
    g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double fv = (i == 7) ? f(c) : f(c - h * kKx[i]) + f(c + h * kKx[i]);
        k15 += kKw[i] * fv;
        if (i % 2 == 1) g7 += kGw[i / 2] * fv;
    }
    k15 *= h;
    g7 *= h;
}

double adapt(const std::function<double(double)>& f, double a, double b, double rel_tol,
             double abs_tol, int depth) {
    double k15, g7;
    gk15(f, a, b, k15, g7);
    const double err = std::abs(k15 - g7);
    if (depth <= 0 || err <= abs_tol || err <= rel_tol * std::abs(k15)) return k15;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, rel_tol, 0.5 * abs_tol, depth - 1) +
           adapt(f, c, b, rel_tol, 0.5 * abs_tol, depth - 1);
}
} // namespace

double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    // Coarse pass to set the absolute scale, then adaptive refinement.
    // Subintervals stop once their error is small against either the local
    // value or their share of the global budget.
    const int nseg = 16;
    double scale = 0.0;
    const double h = (b - a) / nseg;
    for (int s = 0; s < nseg; ++s) {
        double k15, g7;
        gk15(f, a + s * h, a + (s + 1) * h, k15, g7);
        scale += std::abs(k15);
    }
    const double abs_tol = std::max(rel_tol * scale, 1e-300) / nseg;
    double total = 0.0;
    for (int s = 0; s < nseg; ++s)
        total += adapt(f, a + s * h, a + (s + 1) * h, rel_tol, abs_tol, 18);
    return total;
}

} // namespace quadrature

double radial_integral(int n1, int l1, int n2, int l2, int power) {
    if (power < 0 || power > 2) throw std::domain_error("radial_integral: power must be 0, 1 or 2");
    if (n1 < 1 || l1 < 0 || l1 > n1 - 1 || n2 < 1 || l2 < 0 || l2 > n2 - 1)
        throw std::domain_error("radial_integral: invalid quantum numbers");
    const double rmax = 40.0 * double(std::max(n1, n2)) * double(std::max(n1, n2));
    auto f = [=](double r) {
        return radial_wavefunction(n1, l1, r) * radial_wavefunction(n2, l2, r) *
               std::pow(r, power + 2);
    };
    return quadrature::gauss_kronrod(f, 0.0, rmax, 1e-12);
}

// ---------------------------------------------------------------------------
// Operator tables

namespace {

const Complex kI{0.0, 1.0};

// x_i = r sum_q U[i][q+1] C^1_q
const std::array<std::array<Complex, 3>, 3>& u_table() {
    static const std::array<std::array<Complex, 3>, 3> u = [] {
        const double s = 1.0 / std::sqrt(2.0);
        std::array<std::array<Complex, 3>, 3> t{};
        t[0] = {Complex(s), Complex(0.0), Complex(-s)};       // x
        t[1] = {kI * s, Complex(0.0), kI * s};                // y
        t[2] = {Complex(0.0), Complex(1.0), Complex(0.0)};    // z
        return t;
    }();
    return u;
}

// n_k n_j = delta_kj/3 + sum_q W[k][j][q+2] C^2_q
const std::array<std::array<std::array<Complex, 5>, 3>, 3>& w_table() {
    static const std::array<std::array<std::array<Complex, 5>, 3>, 3> w = [] {
        const double r6 = 1.0 / std::sqrt(6.0);
        std::array<std::array<std::array<Complex, 5>, 3>, 3> t{};
        t[2][2] = {Complex(0.0), Complex(0.0), Complex(2.0 / 3.0), Complex(0.0), Complex(0.0)};
        t[0][0] = {Complex(r6), Complex(0.0), Complex(-1.0 / 3.0), Complex(0.0), Complex(r6)};
        t[1][1] = {Complex(-r6), Complex(0.0), Complex(-1.0 / 3.0), Complex(0.0), Complex(-r6)};
        t[0][1] = {kI * r6, Complex(0.0), Complex(0.0), Complex(0.0), -kI * r6};
        t[1][0] = t[0][1];
        t[2][0] = {Complex(0.0), Complex(r6), Complex(0.0), Complex(-r6), Complex(0.0)};
        t[0][2] = t[2][0];
        t[2][1] = {Complex(0.0), kI * r6, Complex(0.0), kI * r6, Complex(0.0)};
        t[1][2] = t[2][1];
        return t;
    }();
    return w;
}

} // namespace

Complex angular_dipole_factor(int axis, int la, int ma, int lb, int mb) {
    const auto& u = u_table();
    const double c1 = std::sqrt(kFourPi / 3.0);
    Complex out = 0.0;
    for (int q = -1; q <= 1; ++q) {
        const Complex uq = u[axis][q + 1];
        if (uq == Complex(0.0)) continue;
        const double g = gaunt(la, ma, 1, q, lb, mb);
        if (g != 0.0) out += uq * (c1 * g);
    }
    return out;
}

Complex angular_quad_factor(int k, int j, int la, int ma, int lb, int mb) {
    const auto& w = w_table();
    const double c2 = std::sqrt(kFourPi / 5.0);
    Complex out = 0.0;
    if (k == j && la == lb && ma == mb) out += 2.0 / 3.0;
    for (int q = -2; q <= 2; ++q) {
        const Complex wq = w[k][j][q + 2];
        if (wq == Complex(0.0)) continue;
        const double g = gaunt(la, ma, 2, q, lb, mb);
        if (g != 0.0) out -= wq * (c2 * g);
    }
    return out;
}

Complex angular_momentum_matrix(int axis, int l, int m1, int m2) {
    auto up = [l](int m) { return std::sqrt(double(l * (l + 1) - m * (m + 1))); };
    auto dn = [l](int m) { return std::sqrt(double(l * (l + 1) - m * (m - 1))); };
    switch (axis) {
        case 2: return (m1 == m2) ? Complex(double(m2)) : Complex(0.0);
        case 0:
            if (m1 == m2 + 1) return Complex(0.5 * up(m2));
            if (m1 == m2 - 1) return Complex(0.5 * dn(m2));
            return 0.0;
        case 1:
            if (m1 == m2 + 1) return -kI * (0.5 * up(m2));
            if (m1 == m2 - 1) return kI * (0.5 * dn(m2));
            return 0.0;
    }
    throw std::domain_error("angular_momentum_matrix: axis must be 0, 1 or 2");
}

// ---------------------------------------------------------------------------
// RadialTables

RadialTables::Key RadialTables::make_key(int n1, int l1, int n2, int l2, int power) {
    if (std::tie(n1, l1) > std::tie(n2, l2)) {
        std::swap(n1, n2);
        std::swap(l1, l2);
    }
    return {n1, l1, n2, l2, power};
}

RadialTables::RadialTables(int n_max) : n_max_(n_max) {
    if (n_max < 2) throw std::domain_error("RadialTables: n_max must be >= 2");
    // Channels used by the response sums: dipole from the ground state,
    // p-p and p-d couplings, and the d-shell quadrupole back to 1s.
    for (int n = 2; n <= n_max_; ++n)
        cache_[make_key(1, 0, n, 1, 1)] = radial_integral(1, 0, n, 1, 1);
    for (int n1 = 2; n1 <= n_max_; ++n1)
        for (int n = n1; n <= n_max_; ++n)
            cache_[make_key(n1, 1, n, 1, 2)] = radial_integral(n1, 1, n, 1, 2);
    for (int n = 2; n <= n_max_; ++n)
        for (int n1 = 3; n1 <= n_max_; ++n1)
            cache_[make_key(n, 1, n1, 2, 1)] = radial_integral(n, 1, n1, 2, 1);
    for (int n1 = 3; n1 <= n_max_; ++n1)
        cache_[make_key(n1, 2, 1, 0, 2)] = radial_integral(n1, 2, 1, 0, 2);
}

double RadialTables::get(int n1, int l1, int n2, int l2, int power) const {
    if (power < 1 || power > 2) throw std::domain_error("RadialTables::get: power must be 1 or 2");
    const auto it = cache_.find(make_key(n1, l1, n2, l2, power));
    if (it != cache_.end()) return it->second;
    return radial_integral(n1, l1, n2, l2, power);
}

double RadialTables::overlap(int n1, int n2, int l) const {
    if (n1 == n2) return 1.0;
    return radial_integral(n1, l, n2, l, 0);
}

void RadialTables::save(const std::filesystem::path& p) const {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("RadialTables::save: cannot open " + p.string());
    out << "chieb-radial-cache 1 n_max=" << n_max_ << "\n";
    char buf[64];
    for (const auto& [key, value] : cache_) {
        const auto& [n1, l1, n2, l2, power] = key;
        auto res = std::to_chars(buf, buf + sizeof(buf), value);
        out << n1 << ' ' << l1 << ' ' << n2 << ' ' << l2 << ' ' << power << ' '
            << std::string_view(buf, res.ptr - buf) << "\n";
    }
}

void RadialTables::load(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("RadialTables::load: cannot open " + p.string());
    std::string header;
    std::getline(in, header);
    if (header.rfind("chieb-radial-cache 1", 0) != 0)
        throw std::runtime_error("RadialTables::load: unsupported cache format");
    cache_.clear();
    int n1, l1, n2, l2, power;
    double value;
    while (in >> n1 >> l1 >> n2 >> l2 >> power >> value)
        cache_[make_key(n1, l1, n2, l2, power)] = value;
}

// ---------------------------------------------------------------------------
// Matrix elements

Complex position_element(const HState& a, int axis, const HState& b, const RadialTables* tables) {
    const Complex ang = angular_dipole_factor(axis, a.l, a.m, b.l, b.m);
    if (ang == Complex(0.0)) return 0.0;
    const double rad = tables ? tables->get(a.n, a.l, b.n, b.l, 1)
                              : radial_integral(a.n, a.l, b.n, b.l, 1);
    return rad * ang;
}

Complex angular_momentum_element(const HState& a, int axis, const HState& b) {
    if (a.l != b.l) return 0.0;
    const Complex ang = angular_momentum_matrix(axis, a.l, a.m, b.m);
    if (ang == Complex(0.0)) return 0.0;
    const double rad = (a.n == b.n) ? 1.0 : radial_integral(a.n, a.l, b.n, b.l, 0);
    return rad * ang;
}

Complex quadrupole_element(const HState& a, int k, int j, const HState& b,
                           const RadialTables* tables) {
    const Complex ang = angular_quad_factor(k, j, a.l, a.m, b.l, b.m);
    if (ang == Complex(0.0)) return 0.0;
    const double rad = tables ? tables->get(a.n, a.l, b.n, b.l, 2)
                              : radial_integral(a.n, a.l, b.n, b.l, 2);
    return rad * ang;
}

} // namespace chieb
