#include <catch2/catch_amalgamated.hpp>

#include "genus2/pillow.hpp"

using namespace genus2;

TEST_CASE("trace coordinates of basic pairs") {
    PillowPoint w = goldman_w(Q_i, Q_j);
    CHECK(w.x == 0.0);
    CHECK(w.y == 0.0);
    CHECK(w.z == 0.0);  // Re(i * conj(j)) = Re(-k) = 0
    CHECK(k_eval(w) == -1.0);

    PillowPoint u = goldman_w(Q_i, Q_i);
    CHECK(u.z == 1.0);  // Re(i * conj(i)) = Re(1)
    CHECK(k_eval(u) == 1.0);
}

TEST_CASE("k, gradient and Hessian at distinguished points") {
    CHECK(k_eval({0, 0, 0}) == -1.0);
    for (const auto& c : pillow_corners()) {
        CHECK(k_eval(c) == 1.0);
        CHECK(k_grad(c).norm() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k_hess(c));
        int neg = 0;
        for (int i = 0; i < 3; ++i) neg += es.eigenvalues()(i) < 0;
        CHECK(neg == 1);  // Morse index 1
    }
    Vec3 g = k_grad({0.2, -0.3, 0.5});
    CHECK(g.x == Catch::Approx(4 * (0.2 - (-0.3) * 0.5)));
    CHECK(g.y == Catch::Approx(4 * (-0.3 - 0.2 * 0.5)));
    CHECK(g.z == Catch::Approx(4 * (0.5 - 0.2 * (-0.3))));
}

TEST_CASE("kappa equals k of the trace coordinates") {
    Rng rng(3);
    double worst = 0;
    for (int n = 0; n < 2000; ++n) {
        Quat a = rng.random_unit(), b = rng.random_unit();
        worst = std::max(worst,
                         std::abs(re(commutator(a, b)) - kappa_from_w(a, b)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("critical point census: origin plus four corners") {
    for (int grid : {8, 12}) {
        auto pts = find_critical_points(grid);
        REQUIRE(pts.size() == 5);
        for (const auto& p : pts) CHECK(k_grad(p).norm() < 1e-10);
        // sorted order puts (-1,-1,1) first and origin in the middle
        CHECK(corner_distance(pts[0]) < 1e-10);
        CHECK(Vec3{pts[2].x, pts[2].y, pts[2].z}.norm() < 1e-10);
    }
    CHECK_THROWS_AS(find_critical_points(4), std::domain_error);
}

TEST_CASE("level_point hits the requested level") {
    Rng rng(4);
    for (int n = 0; n < 200; ++n) {
        Vec3 w = rng.random_s2();
        double c = rng.uniform(-1.0, 1.0);
        PillowPoint p = level_point(w, c);
        CHECK(std::abs(k_eval(p) - c) < 1e-12);
        CHECK(in_B(p, 1e-9));
    }
    CHECK_THROWS_AS(level_point({1, 0, 0}, 1.5), std::domain_error);
}

TEST_CASE("corner-directed flow line is captured") {
    Vec3 dir = Vec3{1, 1, 1}.normalized();
    PillowPoint p0 = level_point(dir, 0.0);
    FlowLine f = flow_alpha(p0, 1.0);
    CHECK(f.terminal_flag == TerminalFlag::Corner);
}

TEST_CASE("generic flow line exits through the boundary tracking its level") {
    Rng rng(8);
    Vec3 dir = rng.random_s2();
    PillowPoint p0 = level_point(dir, 0.0);
    FlowLine f = flow_alpha(p0, 1.0);
    CHECK(f.terminal_flag == TerminalFlag::Boundary);
    double worst = 0, prev = -2;
    for (const auto& [t, p] : f.samples) {
        worst = std::max(worst, std::abs(k_eval(p) - t));
        CHECK(t > prev);
        prev = t;
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("flow down then up returns to the start") {
    Rng rng(12);
    Vec3 dir = rng.random_s2();
    PillowPoint p0 = level_point(dir, 0.6);
    FlowLine down = flow_alpha(p0, 0.1);
    PillowPoint q = down.samples.back().second;
    FlowLine up = flow_alpha(q, 0.6);
    PillowPoint r = up.samples.back().second;
    CHECK(std::hypot(r.x - p0.x, r.y - p0.y, r.z - p0.z) < 1e-5);
}

TEST_CASE("lambda coordinates: t equals kappa, twist-invariant inputs agree") {
    SurfaceRep r{Q_i, Q_j, Q_i, Q_j};  // kappa = -1 is out of range
    CHECK_THROWS_AS(lambda_coords(r), std::domain_error);
    Rng rng(21);
    for (int n = 0; n < 5; ++n) {
        SurfaceRep s = random_nonabelian_rep(rng);
        double ka = kappa(s);
        if (std::abs(ka) > 0.9) continue;
        LambdaCoords lc = lambda_coords(s);
        CHECK(lc.t == Catch::Approx(ka));
        CHECK(std::abs(lc.sigma_minus.norm() - 1.0) < 1e-12);
        CHECK(std::abs(lc.sigma_plus.norm() - 1.0) < 1e-12);
    }
}
