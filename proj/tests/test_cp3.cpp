#include <catch2/catch_amalgamated.hpp>

#include "genus2/cp3.hpp"

using namespace genus2;

TEST_CASE("kappa_cp3 at distinguished points") {
    CP3Point p0;
    p0 << 1, 0, 0, 0;
    CHECK(kappa_cp3(p0) == -1.0);
    CP3Point p1;
    p1 << 1, std::complex<double>(0, 1), 0, 0;
    CHECK(kappa_cp3(p1) == 1.0);
    CP3Point p2;
    p2 << 1, std::complex<double>(0, 1.0 / std::sqrt(3.0)), 0, 0;
    CHECK(kappa_cp3(p2) == Catch::Approx(0.5).margin(1e-14));
}

TEST_CASE("kappa_cp3 is scale and phase invariant") {
    Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        CP3Point z = random_cp3(rng);
        double k = kappa_cp3(z);
        CHECK(k >= -1.0 - 1e-14);
        CHECK(k <= 1.0 + 1e-14);
        std::complex<double> ph = std::polar(2.7, rng.uniform(0, 6.28));
        CHECK(std::abs(kappa_cp3(CP3Point(ph * z)) - k) < 1e-13);
    }
}

TEST_CASE("kappa_cp3 is SO(4) invariant") {
    Rng rng(8);
    for (int n = 0; n < 100; ++n) {
        CP3Point z = random_cp3(rng);
        Eigen::Matrix4d M = random_so4(rng);
        CHECK((M * M.transpose() - Eigen::Matrix4d::Identity()).norm() < 1e-12);
        CHECK(std::abs(M.determinant() - 1.0) < 1e-12);
        CHECK(std::abs(kappa_cp3(apply_so4(M, z)) - kappa_cp3(z)) < 1e-12);
    }
}

TEST_CASE("extremal loci: real points and quadric points") {
    Rng rng(12);
    for (int n = 0; n < 100; ++n) {
        CHECK(std::abs(kappa_cp3(random_real_point(rng)) + 1.0) < 1e-14);
        CHECK(std::abs(kappa_cp3(random_quadric_point(rng)) - 1.0) < 1e-13);
    }
}

TEST_CASE("gradient norm: zero on extremal loci, positive mid-level") {
    Rng rng(19);
    for (int n = 0; n < 20; ++n) {
        CHECK(grad_norm_cp3(random_real_point(rng)) < 1e-6);
        CHECK(grad_norm_cp3(random_quadric_point(rng)) < 1e-6);
        CP3Point z = random_cp3(rng);
        if (std::abs(kappa_cp3(z)) < 0.8) CHECK(grad_norm_cp3(z) > 1e-3);
    }
}
