#include <catch2/catch_amalgamated.hpp>

#include "genus2/lagr.hpp"

using namespace genus2;

TEST_CASE("pillowcase meridians satisfy ba = cd") {
    Rng rng(2);
    for (int n = 0; n < 200; ++n) {
        FourTuple f = xi(rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI));
        CHECK(fourtuple_defect(f) < 1e-14);
    }
    FourTuple f = xi(0, PI);
    CHECK(dist(f.a, Q_i) == 0.0);
    CHECK(dist(f.b, Q_i) == 0.0);
    CHECK(dist(f.c, -Q_i) < 1e-15);
    CHECK(dist(f.d, -Q_i) < 1e-15);
}

TEST_CASE("L satisfies the relator with kappa = cos(gamma - theta)") {
    Rng rng(7);
    for (int n = 0; n < 500; ++n) {
        LagrParam p{rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6),
                    rng.uniform(-6, 6)};
        SurfaceRep r = L_param(p);
        REQUIRE(relator_defect(r) < 1e-12);
        CHECK(std::abs(kappa(r) - std::cos(p.gamma - p.theta)) < 1e-12);
        CHECK(std::abs(re(r.Rm)) < 1e-15);
        CHECK(std::abs(re(r.Sp)) < 1e-15);
    }
}

TEST_CASE("G-action generators preserve the conjugacy class of L") {
    Rng rng(13);
    for (int n = 0; n < 100; ++n) {
        LagrParam p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3),
                    rng.uniform(-3, 3)};
        for (auto* s : {&sigma0, &sigma1, &sigma2}) {
            ConjResult cr = conj_equivalent(L_param(p), L_param((*s)(p)));
            CHECK(cr.residual < 1e-10);
        }
    }
}

TEST_CASE("fiber degenerations at the two circle corners") {
    CHECK(fiber_type(0, PI) == FiberType::Circle);
    CHECK(fiber_type(PI, 0) == FiberType::Circle);
    CHECK(fiber_type(PI / 2, 1.0) == FiberType::Torus);
    CHECK(fiber_type(0, 0) == FiberType::Torus);
    // periodicity of the chart
    CHECK(fiber_type(TWO_PI, PI) == FiberType::Circle);
    CHECK(fiber_type(-PI, TWO_PI) == FiberType::Circle);
}

TEST_CASE("twist flow: kappa invariant, additive, 2pi-trivial") {
    Rng rng(19);
    for (int n = 0; n < 50; ++n) {
        SurfaceRep r = random_nonabelian_rep(rng);
        if (std::abs(kappa(r)) > 1.0 - 1e-6) continue;
        double th = rng.uniform(0, TWO_PI), ph = rng.uniform(0, TWO_PI);
        SurfaceRep a = twist_flow(r, th);
        CHECK(std::abs(kappa(a) - kappa(r)) < 1e-12);
        SurfaceRep b = twist_flow(a, ph), c = twist_flow(r, th + ph);
        double worst = std::max({dist(b.Rp, c.Rp), dist(b.Sp, c.Sp)});
        CHECK(worst < 1e-12);
        ConjResult cr = conj_equivalent(twist_flow(r, TWO_PI), r);
        CHECK(cr.residual < 1e-10);
    }
}

TEST_CASE("perturbation shear formula") {
    auto [g, t] = perturb_H(0.7, 2.1, 0.05);
    CHECK(g == 0.7);
    CHECK(t == 2.1 - 2 * 0.05 * std::sin(0.7));
    auto [g0, t0] = perturb_H(0.7, 2.1, 0.0);
    CHECK(t0 == 2.1);
}

TEST_CASE("multicurve correspondence descriptors") {
    CHECK(correspondence(preset_multicurve("example-a")) ==
          std::vector<LagrDescriptor>{LagrDescriptor::SolidTorus});
    CHECK(correspondence(preset_multicurve("example-b")) ==
          std::vector<LagrDescriptor>{LagrDescriptor::Torus3});
    CHECK(correspondence(preset_multicurve("example-d")) ==
          std::vector<LagrDescriptor>{LagrDescriptor::LensSpace});
    // diagonal arc between the two abelian corners
    Multicurve diag;
    CurvePiece p;
    p.type = PieceType::Arc;
    for (int i = 0; i <= 64; ++i) p.samples.push_back({PI * i / 64.0, PI * i / 64.0});
    diag.pieces.push_back(p);
    CHECK(correspondence(diag) == std::vector<LagrDescriptor>{LagrDescriptor::Cylinder});
    CHECK_THROWS_AS(preset_multicurve("example-z"), std::domain_error);
}

TEST_CASE("doubling: circles duplicate, arcs close up into one circle") {
    Multicurve b2 = double_multicurve(preset_multicurve("example-b"));
    CHECK(correspondence(b2) ==
          (std::vector<LagrDescriptor>{LagrDescriptor::Torus3, LagrDescriptor::Torus3}));
    Multicurve a2 = double_multicurve(preset_multicurve("example-a"));
    REQUIRE(a2.pieces.size() == 1);
    CHECK(a2.pieces[0].type == PieceType::Circle);
    CHECK(correspondence(a2) == std::vector<LagrDescriptor>{LagrDescriptor::Torus3});
}

TEST_CASE("psi lands on kappa = 1 and respects both involutions") {
    Rng rng(29);
    for (int n = 0; n < 100; ++n) {
        double am = rng.uniform(0, TWO_PI), bm = rng.uniform(0, TWO_PI);
        double ap = rng.uniform(0, TWO_PI), bp = rng.uniform(0, TWO_PI);
        double g = rng.uniform(0, PI);
        SurfaceRep r = psi_param(am, bm, ap, bp, g);
        REQUIRE(relator_defect(r) < 1e-12);
        CHECK(std::abs(kappa(r) - 1.0) < 1e-12);
        ConjResult c1 = conj_equivalent(r, psi_param(-am, -bm, -ap, -bp, g));
        CHECK(c1.residual < 1e-10);
        ConjResult c2 = conj_equivalent(r, psi_param(am, bm, -ap, -bp, PI - g));
        CHECK(c2.residual < 1e-10);
    }
}

TEST_CASE("hemisphere representatives: relator and equator gluing") {
    Rng rng(37);
    for (int n = 0; n < 100; ++n) {
        double a = rng.uniform(0, PI / 2), th = rng.uniform(0, TWO_PI);
        CHECK(relator_defect(sphere_A(1, a, th)) < 1e-12);
        CHECK(relator_defect(sphere_A(2, a, th)) < 1e-12);
    }
    for (int n = 0; n < 8; ++n) {
        double th = TWO_PI * n / 8.0;
        SurfaceRep a1 = sphere_A1(PI / 2, th), a2 = sphere_A2(PI / 2, -th);
        double worst = std::max({dist(a1.Rm, a2.Rm), dist(a1.Sm, a2.Sm),
                                 dist(a1.Rp, a2.Rp), dist(a1.Sp, a2.Sp)});
        CHECK(worst < 1e-14);  // gluing holds on the nose at the equator
    }
    // distinct theta-independent apexes
    CHECK(dist(sphere_A1(0, 1.0).Rm, Q_one) < 1e-14);
    CHECK(dist(sphere_A2(0, 1.0).Rm, -Q_one) < 1e-14);
}

TEST_CASE("frozen Heegaard intersection instance") {
    // i1 at (t, alpha, beta) = (0, pi/4, pi/4) meets i2 at (-pi, 3pi/4, 3pi/4)
    SurfaceRep A = i1_eps(0.05, 0.0, PI / 4, PI / 4);
    SurfaceRep B = i2_map(-PI, 3 * PI / 4, 3 * PI / 4);
    ConjResult cr = conj_equivalent(A, B);
    CHECK(cr.equivalent);
    CHECK(cr.residual < 1e-12);
}

TEST_CASE("perturbed holonomy traces of the two example families") {
    for (double eps : {0.01, 0.1}) {
        for (int n = 0; n <= 40; ++n) {
            double t = TWO_PI * n / 40.0;
            SurfaceRep c = i1_eps(eps, t, 0.3, 1.1);
            CHECK(std::abs(kappa(c) - std::cos(PI / 2 - 2 * eps * std::sin(t))) < 1e-12);
            SurfaceRep e = L_param({PI / 2 + t + eps * std::sin(t),
                                    PI / 2 + t - eps * std::sin(t), 0.7, 2.2});
            CHECK(std::abs(kappa(e) - std::cos(2 * eps * std::sin(t))) < 1e-12);
        }
    }
}
