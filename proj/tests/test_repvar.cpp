#include <catch2/catch_amalgamated.hpp>

#include "genus2/repvar.hpp"

using namespace genus2;

namespace {
const double PI = 3.14159265358979323846;
}

TEST_CASE("relator defect of (i,j,i,j) vanishes") {
    // [i,j] = -1 and the two commutators multiply to 1
    SurfaceRep r{Q_i, Q_j, Q_i, Q_j};
    CHECK(relator_defect(r) == 0.0);
    CHECK(kappa(r) == -1.0);
}

TEST_CASE("relator defect detects a broken tuple") {
    SurfaceRep r{Q_i, Q_j, Q_i, Q_i};  // [i,j][i,i] = -1
    CHECK(relator_defect(r) == 2.0);
    CHECK_THROWS_AS(kappa(r), std::domain_error);
}

TEST_CASE("orbit types") {
    CHECK(orbit_type({Q_one, -Q_one}) == OrbitType::Central);
    CHECK(orbit_type({Q_i, exp_im({1, 0, 0}, 0.3)}) == OrbitType::AbelianNonCentral);
    CHECK(orbit_type({Q_i, Q_j}) == OrbitType::NonAbelian);
    CHECK_THROWS_AS(orbit_type({}), std::domain_error);
}

TEST_CASE("conjugacy test: rotation about i flips j") {
    // e^{(pi/2) i} j e^{-(pi/2) i} = -j
    ConjResult cr = conj_equivalent(std::vector<Quat>{Q_i, Q_j},
                                    std::vector<Quat>{Q_i, -Q_j});
    CHECK(cr.equivalent);
    CHECK(cr.residual < 1e-12);
    CHECK(dist(rotate(cr.g, Q_j), -Q_j) < 1e-12);
}

TEST_CASE("conjugacy test: random conjugate words match") {
    Rng rng(5);
    for (int n = 0; n < 50; ++n) {
        Quat g = rng.random_unit();
        std::vector<Quat> w1, w2;
        for (int k = 0; k < 4; ++k) {
            Quat q = rng.random_unit();
            w1.push_back(q);
            w2.push_back(rotate(g, q));
        }
        ConjResult cr = conj_equivalent(w1, w2);
        CHECK(cr.equivalent);
        CHECK(cr.residual < 1e-12);
    }
}

TEST_CASE("conjugacy test: genuinely mismatched angle rejected") {
    // second vectors at angle pi/2 vs pi/3 from the first: no rotation aligns both
    Quat b1 = pure(Vec3{0, 1, 0});                                   // angle pi/2 from i
    Quat b2 = pure(Vec3{std::cos(PI / 3), std::sin(PI / 3), 0});     // angle pi/3 from i
    ConjResult cr = conj_equivalent(std::vector<Quat>{Q_i, b1},
                                    std::vector<Quat>{Q_i, b2});
    CHECK_FALSE(cr.equivalent);
    CHECK(cr.residual > 0.1);
    // control at the same angle: conjugate
    Quat b3 = pure(Vec3{0, std::cos(PI / 5), std::sin(PI / 5)});     // still orthogonal to i
    CHECK(conj_equivalent(std::vector<Quat>{Q_i, b1}, std::vector<Quat>{Q_i, b3}).equivalent);
}

TEST_CASE("fingerprint is conjugation invariant") {
    Rng rng(9);
    SurfaceRep r = random_nonabelian_rep(rng);
    Quat g = rng.random_unit();
    auto f1 = fingerprint(r), f2 = fingerprint(conjugate_rep(g, r));
    for (int i = 0; i < 10; ++i) CHECK(std::abs(f1[i] - f2[i]) < 1e-13);
}

TEST_CASE("commutator partner solver") {
    Rng rng(17);
    for (int n = 0; n < 50; ++n) {
        // manufacture a solvable instance from a known pair
        Quat R = rng.random_unit(), S = rng.random_unit();
        Quat c = commutator(R, S);
        auto S2 = solve_commutator_partner(R, c, rng.uniform(0, 2 * PI));
        REQUIRE(S2.has_value());
        CHECK(dist(commutator(R, *S2), c) < 1e-9);
    }
    // unsolvable: Re(conj(R) c) = sin(0.4) != 0 = Re(R)
    CHECK_FALSE(solve_commutator_partner(Q_i, exp_im({1, 0, 0}, 0.4), 0.0).has_value());
}

TEST_CASE("nonabelian sampler satisfies the relator") {
    Rng rng(23);
    for (int n = 0; n < 20; ++n) {
        SurfaceRep r = random_nonabelian_rep(rng);
        CHECK(relator_defect(r) < 1e-9);
        CHECK(orbit_type({r.Rm, r.Sm, r.Rp, r.Sp}) == OrbitType::NonAbelian);
    }
}

TEST_CASE("sixtuple and fourtuple defects") {
    SixTuple s{{Q_i, Q_i, Q_i, Q_i, Q_i, Q_i}};
    CHECK(sixtuple_defect(s) == 2.0);  // i^6 = -1, product-one fails by distance 2
    SixTuple t{{Q_i, -Q_i, Q_j, -Q_j, Q_k, -Q_k}};
    CHECK(sixtuple_defect(t) < 1e-15);
    FourTuple f{Q_i, Q_j, Q_k, Q_i};  // ba = ji = -k, cd = ki = j: mismatch
    CHECK(fourtuple_defect(f) > 0.1);
}
