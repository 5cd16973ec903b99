#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chieb/ho.hpp"
#include "chieb/tensor.hpp"

using namespace chieb;

TEST_CASE("split_sym_antisym") {
    SUBCASE("identity splits into itself and zero") {
        ResponseTensor t{Matrix3c::Identity(), 0.0};
        const auto [s, a] = split_sym_antisym(t);
        CHECK((s.entries - Matrix3c::Identity()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(a.entries.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("off-diagonal pair") {
        ResponseTensor t;
        t.entries(0, 1) = Complex(3.0, 1.0);
        t.entries(1, 0) = Complex(1.0, -1.0);
        const auto [s, a] = split_sym_antisym(t);
        CHECK(s.entries(0, 1) == Complex(2.0, 0.0));
        CHECK(a.entries(0, 1) == Complex(1.0, 1.0));
        CHECK(s.entries(1, 0) == s.entries(0, 1));
        CHECK(a.entries(1, 0) == -a.entries(0, 1));
    }

    SUBCASE("recombination is exact") {
        // dyadic entries: the half-sums are representable, so the split
        // must recombine without any rounding residue
        ResponseTensor t;
        int v = 1;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.entries(i, j) = Complex(v * 0.375, -v * 1.25), ++v;
        const auto [s, a] = split_sym_antisym(t);
        const Matrix3c back = s.entries + a.entries;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(back(i, j) == t.entries(i, j));
                CHECK(s.entries(i, j) == s.entries(j, i));
                CHECK(a.entries(i, j) == -a.entries(j, i));
            }
    }

    SUBCASE("recombination of a physical tensor is exact to one ulp") {
        HOModel model{electron_proton_pair(), 1e16, {}};
        model.fields.E0 = Eigen::Vector3d(1e5, 3e4, -2e4);
        model.fields.B0 = Eigen::Vector3d(4.0, 10.0, 6.0);
        const ResponseTensor t = ho_chi_total(model, 2.3e15);
        const auto [s, a] = split_sym_antisym(t);
        const Matrix3c back = s.entries + a.entries;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(back(i, j) - t.entries(i, j)) <=
                      2e-16 * std::abs(t.entries(i, j)));
    }

    SUBCASE("static oscillator tensor has a nonzero antisymmetric part") {
        HOModel model{electron_proton_pair(), 1e16, {}};
        model.fields.E0 = Eigen::Vector3d(1e5, 0.0, 0.0);
        model.fields.B0 = Eigen::Vector3d(0.0, 10.0, 0.0);
        const auto [s, a] = split_sym_antisym(ho_chi_total(model, 0.0));
        CHECK(a.entries.cwiseAbs().maxCoeff() > 0.0);
    }
}

TEST_CASE("bianisotropic_12") {
    ResponseTensor t;
    CHECK(bianisotropic_12(t) == Complex(0.0));
    t.entries(0, 1) = Complex(1.0, 2.0);
    CHECK(bianisotropic_12(t) == Complex(1.0, 2.0));
}

TEST_CASE("dimensionless") {
    const Constants k = codata();
    ResponseTensor t;
    CHECK(dimensionless(t, 1.0).cwiseAbs().maxCoeff() == 0.0);

    const double volume = 2.3e-30;
    t.entries(0, 1) = k.eps0 * k.c_light * volume;
    CHECK(dimensionless(t, volume)(0, 1).real() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(dimensionless(t, 0.0), std::domain_error);
    CHECK_THROWS_AS(dimensionless(t, -1.0), std::domain_error);
}
