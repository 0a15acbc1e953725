#include <catch2/catch_amalgamated.hpp>

#include "genus2/quat.hpp"

using namespace genus2;

TEST_CASE("Hamilton multiplication table") {
    CHECK(dist(Q_i * Q_j, Q_k) == 0.0);
    CHECK(dist(Q_j * Q_k, Q_i) == 0.0);
    CHECK(dist(Q_k * Q_i, Q_j) == 0.0);
    CHECK(dist(Q_i * Q_i, -Q_one) == 0.0);
    CHECK(dist(Q_j * Q_i, -Q_k) == 0.0);
}

TEST_CASE("product of generic quaternions") {
    Quat p{1, 2, 3, 4}, q{5, 6, 7, 8};
    Quat r = p * q;
    CHECK(r.a == -60.0);
    CHECK(r.b == 12.0);
    CHECK(r.c == 30.0);
    CHECK(r.d == 24.0);
}

TEST_CASE("conj, re, im, inner, dist") {
    Quat q{1, -2, 3, -4};
    CHECK(re(q) == 1.0);
    CHECK(im(q).x == -2.0);
    CHECK(dist(conj(conj(q)), q) == 0.0);
    CHECK(inner(q, q) == Catch::Approx(q.norm2()));
    // conj is an anti-homomorphism
    Quat p{0.5, 0.1, -0.7, 0.2};
    CHECK(dist(conj(p * q), conj(q) * conj(p)) < 1e-14);
}

TEST_CASE("exp_im basics") {
    const double pi = 3.14159265358979323846;
    CHECK(dist(exp_im({0, 0, 1}, pi / 2), Q_k) < 1e-15);
    CHECK(dist(exp_im({1, 0, 0}, pi), -Q_one) < 1e-15);
    CHECK(dist(exp_im({0, 1, 0}, 0), Q_one) == 0.0);
    CHECK_THROWS_AS(exp_im({1, 1, 0}, 0.3), std::domain_error);
    // one-parameter group property on a fixed axis
    Vec3 P = Vec3{3, -1, 2}.normalized();
    CHECK(dist(exp_im(P, 0.4) * exp_im(P, 0.9), exp_im(P, 1.3)) < 1e-15);
}

TEST_CASE("commutator of i and j is -1") {
    CHECK(dist(commutator(Q_i, Q_j), -Q_one) == 0.0);
}

TEST_CASE("trace identity on Haar samples") {
    Rng rng(11);
    double worst = 0;
    for (int n = 0; n < 1000; ++n) {
        Quat a = rng.random_unit(), b = rng.random_unit();
        worst = std::max(worst,
                         std::abs(re(a * b) + re(conj(a) * b) - 2.0 * re(a) * re(b)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("rng determinism and unit samples") {
    Rng r1(42), r2(42);
    for (int n = 0; n < 100; ++n) {
        Quat a = r1.random_unit(), b = r2.random_unit();
        CHECK(dist(a, b) == 0.0);
        CHECK(std::abs(a.norm() - 1.0) < 1e-12);
    }
    Vec3 v = r1.random_s2();
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
}
