#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>

#include "chieb/hydrogen_states.hpp"

using namespace chieb;

namespace {
const double kRho12 = 128.0 * std::sqrt(6.0) / 243.0; // <1s|r|2p>
}

TEST_CASE("state validation") {
    CHECK_NOTHROW(HState(1, 0, 0));
    CHECK_NOTHROW(HState(4, 3, -3));
    CHECK_THROWS_AS(HState(0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(HState(2, 2, 0), std::domain_error);
    CHECK_THROWS_AS(HState(2, 1, 2), std::domain_error);
}

TEST_CASE("bound-state energies") {
    CHECK(hydrogen_energy(1) == -0.5);
    CHECK(hydrogen_energy(2) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(hydrogen_energy(5) == doctest::Approx(-0.02).epsilon(1e-15));
    CHECK_THROWS_AS(hydrogen_energy(0), std::domain_error);
}

TEST_CASE("radial wavefunctions") {
    CHECK(radial_wavefunction(1, 0, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(radial_wavefunction(2, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(radial_wavefunction(1, 0, -0.5), std::domain_error);

    SUBCASE("normalization") {
        for (const auto [n, l] : {std::pair{2, 1}, {3, 0}, {5, 2}, {10, 4}, {20, 1}})
            CHECK(radial_integral(n, l, n, l, 0) == doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("2p radial probability peaks at r = 4") {
        double best_r = 0.0, best = 0.0;
        for (double r = 0.05; r < 20.0; r += 0.001) {
            const double u = r * radial_wavefunction(2, 1, r);
            if (u * u > best) best = u * u, best_r = r;
        }
        CHECK(best_r == doctest::Approx(4.0).epsilon(1e-3));
    }
}

TEST_CASE("radial integrals") {
    CHECK(radial_integral(1, 0, 1, 0, 1) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(radial_integral(1, 0, 2, 1, 1) == doctest::Approx(kRho12).epsilon(1e-10));
    CHECK(radial_integral(1, 0, 1, 0, 2) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(radial_integral(2, 1, 2, 1, 2) == doctest::Approx(30.0).epsilon(1e-10));
}

TEST_CASE("gaunt coefficients") {
    const double y00 = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    CHECK(gaunt(0, 0, 0, 0, 0, 0) == doctest::Approx(y00).epsilon(1e-14));
    CHECK(gaunt(1, 0, 1, 0, 0, 0) == doctest::Approx(y00).epsilon(1e-14));
    CHECK(gaunt(1, 0, 2, 0, 1, 0) ==
          doctest::Approx(0.4 * std::sqrt(5.0 / (4.0 * std::numbers::pi))).epsilon(1e-14));

    SUBCASE("selection rules return exact zeros") {
        CHECK(gaunt(1, 0, 1, 0, 1, 0) == 0.0);  // parity
        CHECK(gaunt(2, 1, 1, 1, 0, 0) == 0.0);  // m mismatch
        CHECK(gaunt(3, 0, 1, 0, 1, 0) == 0.0);  // triangle
    }

    SUBCASE("3j sanity") {
        CHECK(wigner3j(1, 1, 2, 0, 0, 0) == doctest::Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-14));
        CHECK(wigner3j(1, 2, 1, 0, 0, 0) == doctest::Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-14));
        CHECK(wigner3j(1, 1, 1, 0, 0, 0) == 0.0);
        CHECK(wigner3j(1, 1, 2, 1, -1, 0) == doctest::Approx(std::sqrt(1.0 / 30.0)).epsilon(1e-14));
    }
}

TEST_CASE("position elements") {
    const HState g(1, 0, 0);
    CHECK(position_element(g, 2, HState(2, 1, 0)).real() ==
          doctest::Approx(kRho12 / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(position_element(g, 2, HState(2, 1, 0)).real() == doctest::Approx(0.74494).epsilon(1e-5));
    CHECK(position_element(g, 0, HState(2, 1, 0)) == Complex(0.0)); // x carries m = +-1
    for (int m = -2; m <= 2; ++m)
        for (int axis = 0; axis < 3; ++axis)
            CHECK(position_element(g, axis, HState(3, 2, m)) == Complex(0.0));
}

TEST_CASE("angular momentum elements") {
    CHECK(angular_momentum_element(HState(2, 1, 1), 2, HState(2, 1, 1)) == Complex(1.0));
    CHECK(angular_momentum_element(HState(3, 1, 1), 0, HState(3, 1, 0)).real() ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(angular_momentum_element(HState(2, 1, 1), 0, HState(2, 0, 0)) == Complex(0.0));

    SUBCASE("different-n same-l overlap vanishes by orthogonality") {
        for (int axis = 0; axis < 3; ++axis)
            for (int m1 = -1; m1 <= 1; ++m1)
                for (int m2 = -1; m2 <= 1; ++m2)
                    CHECK(std::abs(angular_momentum_element(HState(2, 1, m1), axis,
                                                            HState(3, 1, m2))) < 1e-10);
    }
}

TEST_CASE("quadrupole elements") {
    const HState g(1, 0, 0);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
            const Complex v = quadrupole_element(g, k, j, g);
            if (k == j)
                CHECK(v.real() == doctest::Approx(2.0).epsilon(1e-10));
            else
                CHECK(v == Complex(0.0));
        }

    // parity: no coupling between l = 0 and l = 1
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
            for (int m = -1; m <= 1; ++m)
                CHECK(quadrupole_element(g, k, j, HState(2, 1, m)) == Complex(0.0));

    // <2 1 0| x^2 d33 - z^2 |2 1 0> = <r^2>_2p * 2/5
    CHECK(quadrupole_element(HState(2, 1, 0), 2, 2, HState(2, 1, 0)).real() ==
          doctest::Approx(12.0).epsilon(1e-10));
}

TEST_CASE("hermiticity and selection-rule nullity") {
    std::mt19937 rng(7031u);
    std::uniform_int_distribution<int> pick_n(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int na = pick_n(rng), nb = pick_n(rng);
        std::uniform_int_distribution<int> pick_la(0, na - 1), pick_lb(0, nb - 1);
        const int la = pick_la(rng), lb = pick_lb(rng);
        std::uniform_int_distribution<int> pick_ma(-la, la), pick_mb(-lb, lb);
        const HState a(na, la, pick_ma(rng)), b(nb, lb, pick_mb(rng));

        for (int axis = 0; axis < 3; ++axis) {
            const Complex ab = position_element(a, axis, b);
            const Complex ba = position_element(b, axis, a);
            CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
            if (std::abs(a.l - b.l) != 1) CHECK(ab == Complex(0.0));

            const Complex lab = angular_momentum_element(a, axis, b);
            const Complex lba = angular_momentum_element(b, axis, a);
            CHECK(std::abs(lab - std::conj(lba)) < 1e-12);
            if (a.l != b.l) CHECK(lab == Complex(0.0));
        }
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) {
                const Complex qab = quadrupole_element(a, k, j, b);
                const Complex qba = quadrupole_element(b, j, k, a);
                CHECK(std::abs(qab - std::conj(qba)) < 1e-12);
                if ((a.l + b.l) % 2 != 0 || std::abs(a.l - b.l) > 2) CHECK(qab == Complex(0.0));
            }
    }
}

TEST_CASE("bound-state dipole sum rule stays below <z^2>_1s") {
    double sum = 0.0;
    for (int n = 2; n <= 20; ++n)
        for (int m = -1; m <= 1; ++m)
            sum += std::norm(position_element(HState(1, 0, 0), 2, HState(n, 1, m)));
    CHECK(sum > 0.6);
    CHECK(sum < 1.0);
}

TEST_CASE("radial tables") {
    const RadialTables tables(4);

    SUBCASE("cache hits are bit-identical and symmetric") {
        const double a = tables.get(1, 0, 3, 1, 1);
        const double b = tables.get(3, 1, 1, 0, 1);
        CHECK(a == b);
        CHECK(a == tables.get(1, 0, 3, 1, 1));
        CHECK(a == doctest::Approx(radial_integral(1, 0, 3, 1, 1)).epsilon(1e-14));
    }

    SUBCASE("overlap") {
        CHECK(tables.overlap(2, 2, 1) == 1.0);
        CHECK(std::abs(tables.overlap(2, 3, 1)) < 1e-10);
    }

    SUBCASE("dump and reload round-trips bit-exactly") {
        namespace fs = std::filesystem;
        const fs::path p = fs::temp_directory_path() / "chieb_radial_cache_test.txt";
        tables.save(p);
        RadialTables loaded(2);
        loaded.load(p);
        CHECK(loaded.get(1, 0, 3, 1, 1) == tables.get(1, 0, 3, 1, 1));
        CHECK(loaded.get(2, 1, 4, 1, 2) == tables.get(2, 1, 4, 1, 2));
        fs::remove(p);
    }

    CHECK_THROWS_AS(tables.get(1, 0, 2, 1, 0), std::domain_error);
    CHECK_THROWS_AS(RadialTables(1), std::domain_error);
}
