#pragma once

// Verification suites: each runs one module's invariant checks and returns
// a deterministic list of results (no wall-clock data, so reports from equal
// seeds are byte-identical).

#include <string>
#include <vector>

#include "genus2/config.hpp"
#include "genus2/cover.hpp"
#include "genus2/cp3.hpp"
#include "genus2/lagr.hpp"
#include "genus2/pillow.hpp"
#include "genus2/quat.hpp"
#include "genus2/repvar.hpp"

namespace genus2 {

struct CheckResult {
    std::string name;
    long samples = 0;
    double max_defect = 0;
    bool pass = false;
};

inline CheckResult check_max(const std::string& name, long n, double defect, double tol) {
    return {name, n, defect, defect < tol};
}

// ---- quat ----------------------------------------------------------------

inline std::vector<CheckResult> suite_quat(const Config& cfg) {
    std::vector<CheckResult> out;
    Rng rng(cfg.seed);
    long n = cfg.get_count("quat", 100000);

    double d_trace = 0, d_conj = 0, d_hom = 0, d_unit = 0;
    for (long i = 0; i < n; ++i) {
        Quat a = rng.random_unit(), b = rng.random_unit();
        d_trace = std::max(d_trace,
                           std::abs(re(a * b) + re(conj(a) * b) - 2 * re(a) * re(b)));
        d_conj = std::max(d_conj, std::abs(re(conj(a)) - re(a)));
        d_unit = std::max(d_unit, std::abs(a.norm() - 1.0));
    }
    out.push_back(check_max("trace-identity", n, d_trace, 1e-12));
    out.push_back(check_max("re-conj-invariant", n, d_conj, 1e-15));
    out.push_back(check_max("sampler-unit-norm", n, d_unit, cfg.get_tol("tau_unit")));

    long nh = cfg.get_count("quat_hom", 10000);
    for (long i = 0; i < nh; ++i) {
        Vec3 P = rng.random_s2();
        double th = rng.uniform(-10, 10), ph = rng.uniform(-10, 10);
        d_hom = std::max(d_hom, dist(exp_im(P, th) * exp_im(P, ph), exp_im(P, th + ph)));
    }
    out.push_back(check_max("exp-homomorphism", nh, d_hom, 1e-12));

    double d_pos = 0;  // positive-definiteness of the inner product
    bool pos_ok = true;
    for (long i = 0; i < 1000; ++i) {
        Quat a{rng.gauss(), rng.gauss(), rng.gauss(), rng.gauss()};
        if (a.norm() > 1e-9 && inner(a, a) <= 0) pos_ok = false;
        d_pos = std::max(d_pos, std::abs(inner(a, a) - a.norm2()));
    }
    out.push_back({"inner-positive-definite", 1000, d_pos, pos_ok && d_pos < 1e-12});
    return out;
}

// ---- repvar --------------------------------------------------------------

inline std::vector<CheckResult> suite_repvar(const Config& cfg) {
    std::vector<CheckResult> out;
    Rng rng(cfg.seed);
    double tau_ab = cfg.get_tol("tau_ab");

    // fixed-value relator examples
    double e1 = relator_defect({Q_i, Q_j, Q_j, Q_i});
    double e2 = relator_defect({Q_one, Q_one, Q_one, Q_one});
    double e3 = relator_defect({Q_i, Q_j, Q_i, Q_j});
    out.push_back(check_max("relator-examples", 3, std::max({e1, e2, e3}), 1e-15));
    out.push_back(check_max("kappa-ij-ji", 1, std::abs(kappa({Q_i, Q_j, Q_j, Q_i}) + 1.0),
                            1e-15));

    bool ot = orbit_type({Q_i, Q_j}, tau_ab) == OrbitType::NonAbelian &&
              orbit_type({exp_i(0.3), exp_i(1.1)}, tau_ab) == OrbitType::AbelianNonCentral &&
              orbit_type({Q_one, -Q_one}, tau_ab) == OrbitType::Central;
    out.push_back({"orbit-type-examples", 3, ot ? 0.0 : 1.0, ot});

    long n = cfg.get_count("repvar", 10000);
    double d_kinv = 0, d_orbit = 0, d_fp = 0, d_sym = 0;
    bool angle_sep = true;
    for (long i = 0; i < n; ++i) {
        SurfaceRep rho = random_nonabelian_rep(rng, tau_ab);
        Quat g = rng.random_unit();
        SurfaceRep rho2 = conjugate_rep(g, rho);
        d_kinv = std::max(d_kinv, std::abs(kappa(rho) - kappa(rho2)));
        ConjResult cr = conj_equivalent(rho, rho2);
        if (!cr.equivalent) d_orbit = 1.0;
        d_orbit = std::max(d_orbit, cr.residual);
        ConjResult cr2 = conj_equivalent(rho2, rho);
        d_sym = std::max(d_sym, std::abs(cr.residual - cr2.residual));
        auto f1 = fingerprint(rho), f2 = fingerprint(rho2);
        for (int w = 0; w < 10; ++w) d_fp = std::max(d_fp, std::abs(f1[w] - f2[w]));
    }
    out.push_back(check_max("kappa-conjugation-invariant", n, d_kinv, 1e-12));
    out.push_back(check_max("conj-orbit-pairs-true", n, d_orbit, 1e-10));
    out.push_back(check_max("conj-residual-symmetric", n, d_sym, 1e-9));
    out.push_back(check_max("fingerprint-conjugation-invariant", n, d_fp, 1e-12));

    // mismatched pairwise angles are never equivalent; same angle, same real
    // parts always is (rotations preserve angles and nothing else matters
    // for a two-element imaginary list)
    for (long i = 0; i < 200; ++i) {
        double phi = rng.uniform(0.1, PI / 2 - 0.1);  // angle != pi/2
        Quat w2b = pure(Vec3{std::cos(phi), std::sin(phi), 0});
        ConjResult cr = conj_equivalent(std::vector<Quat>{Q_i, Q_j},
                                        std::vector<Quat>{Q_i, w2b}, 1e-8);
        if (cr.equivalent) angle_sep = false;
        double s = rng.uniform(-0.99, 0.99);  // same 90-degree angle: conjugate
        Quat w2c = pure(Vec3{0, std::sqrt(1 - s * s), s});
        ConjResult cr2 = conj_equivalent(std::vector<Quat>{Q_i, Q_j},
                                         std::vector<Quat>{Q_i, w2c}, 1e-8);
        if (!cr2.equivalent) angle_sep = false;
    }
    out.push_back({"conj-detects-angle-mismatch", 400, angle_sep ? 0.0 : 1.0, angle_sep});
    return out;
}

// ---- pillow --------------------------------------------------------------

inline std::vector<CheckResult> suite_pillow(const Config& cfg) {
    std::vector<CheckResult> out;
    Rng rng(cfg.seed);

    long n = cfg.get_count("pillow_kw", 100000);
    double d_kw = 0;
    for (long i = 0; i < n; ++i) {
        Quat a = rng.random_unit(), b = rng.random_unit();
        d_kw = std::max(d_kw, std::abs(kappa_from_w(a, b) - re(commutator(a, b))));
    }
    out.push_back(check_max("kappa-equals-k-of-w", n, d_kw, 1e-10));

    long nc = cfg.get_count("pillow_contain", 1000000);
    double d_in = 0;
    for (long i = 0; i < nc; ++i) {
        PillowPoint p = goldman_w(rng.random_unit(), rng.random_unit());
        double c = p.x * p.x + p.y * p.y + p.z * p.z - 2 * p.x * p.y * p.z;
        d_in = std::max(d_in, c - 1.0);
    }
    out.push_back(check_max("w-image-in-ball", nc, d_in, cfg.get_tol("tau_B")));

    // critical census, stable across grids
    bool census_ok = true;
    double worst_grad = 0;
    for (int g : {8, 12, 16}) {
        auto pts = find_critical_points(g, 1e-12);
        if (pts.size() != 5) census_ok = false;
        int corners = 0, origin = 0;
        for (const auto& p : pts) {
            worst_grad = std::max(worst_grad, k_grad(p).norm());
            double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
            if (r < 1e-8) {
                ++origin;
            } else if (corner_distance(p) < 1e-8) {
                ++corners;
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k_hess(p));
                int neg = 0;
                for (int q = 0; q < 3; ++q)
                    if (es.eigenvalues()(q) < 0) ++neg;
                if (neg != 1) census_ok = false;  // index one
            }
        }
        if (origin != 1 || corners != 4) census_ok = false;
    }
    out.push_back({"critical-census-5-points", 3, worst_grad,
                   census_ok && worst_grad < 1e-10});

    // flow trivialization: 4 corner-directed + generic lines
    long nf = cfg.get_count("pillow_flow", 100);
    double tau_flow = cfg.get_tol("tau_flow");
    double d_level = 0;
    bool flags_ok = true;
    StepCtrl ctrl;
    ctrl.r_corner = cfg.get_tol("r_corner");
    ctrl.tau_flow = tau_flow;
    long done = 0;
    for (const auto& c : pillow_corners()) {
        PillowPoint p0 = level_point(Vec3{c.x, c.y, c.z}.normalized(), 0.0);
        FlowLine f = flow_alpha(p0, 1.0, ctrl);
        for (const auto& [t, p] : f.samples) d_level = std::max(d_level, std::abs(k_eval(p) - t));
        if (f.terminal_flag != TerminalFlag::Corner) flags_ok = false;
        ++done;
    }
    while (done < nf) {
        PillowPoint p0 = level_point(rng.random_s2(), 0.0);
        FlowLine f = flow_alpha(p0, 1.0, ctrl);
        for (const auto& [t, p] : f.samples) d_level = std::max(d_level, std::abs(k_eval(p) - t));
        if (f.terminal_flag != TerminalFlag::Boundary &&
            f.terminal_flag != TerminalFlag::Corner)
            flags_ok = false;
        ++done;
    }
    out.push_back({"flow-level-tracking", nf, d_level, flags_ok && d_level < tau_flow});

    // down-then-up flow returns to the start
    double d_round = 0;
    for (long i = 0; i < 20; ++i) {
        PillowPoint p0 = level_point(rng.random_s2(), 0.35);
        FlowLine down = flow_alpha(p0, 0.0, ctrl);
        FlowLine up = flow_alpha(down.samples.back().second, 0.35, ctrl);
        const PillowPoint& q = up.samples.back().second;
        d_round = std::max(d_round, std::sqrt((q.x - p0.x) * (q.x - p0.x) +
                                              (q.y - p0.y) * (q.y - p0.y) +
                                              (q.z - p0.z) * (q.z - p0.z)));
    }
    out.push_back(check_max("flow-invertibility", 20, d_round, 1e-5));

    // lambda coordinates: t equals kappa
    double d_lt = 0;
    for (long i = 0; i < 50; ++i) {
        SurfaceRep rho = random_nonabelian_rep(rng);
        if (std::abs(kappa(rho)) > 1.0 - 2e-3) continue;
        LambdaCoords lc = lambda_coords(rho, cfg.get_tol("delta_lambda"), ctrl);
        d_lt = std::max(d_lt, std::abs(lc.t - kappa(rho)));
    }
    out.push_back(check_max("lambda-t-equals-kappa", 50, d_lt, 1e-12));
    return out;
}

// ---- cover ---------------------------------------------------------------

inline std::vector<CheckResult> suite_cover(const Config& cfg) {
    std::vector<CheckResult> out;
    Rng rng(cfg.seed);

    // fiber structure over S^5
    long n = cfg.get_count("cover_fiber", 10000);
    double d_proj = 0, slack_min = 1e300;
    bool orbit_ok = true;
    for (long i = 0; i < n; ++i) {
        Eigen::VectorXd v(6);
        for (int q = 0; q < 6; ++q) v(q) = rng.gauss();
        v.normalize();
        auto fiber = ut_fiber(v);
        if (fiber.empty() || fiber.size() > 4) orbit_ok = false;
        for (const auto& u : fiber) {
            d_proj = std::max(d_proj, (ut_project(u) - v).norm());
            UTPoint tu = tau(u);  // partner must be in the set
            bool found = false;
            for (const auto& w : fiber)
                if ((w.w1 - tu.w1).norm() + (w.w2 - tu.w2).norm() < 1e-8) found = true;
            if (!found) orbit_ok = false;
        }
        // single orbit: every element is tau-of or equal to the first
        for (const auto& u : fiber) {
            UTPoint t0 = tau(fiber[0]);
            if ((u.w1 - fiber[0].w1).norm() + (u.w2 - fiber[0].w2).norm() > 1e-8 &&
                (u.w1 - t0.w1).norm() + (u.w2 - t0.w2).norm() > 1e-8)
                orbit_ok = false;
        }
        auto [s1, s2] = lemma_bound_slack(v);
        slack_min = std::min({slack_min, s1, s2});
    }
    out.push_back({"fiber-single-tau-orbit", n, d_proj, orbit_ok && d_proj < 1e-9});
    out.push_back({"fiber-lambda-bounds", n, -slack_min, slack_min >= -1e-10});

    // p o tau = p and the tau-fixed locus image
    long np = cfg.get_count("cover_proj", 100000);
    double d_ptau = 0, d_fix = 0;
    for (long i = 0; i < np; ++i) {
        Eigen::Vector4d a, b;
        for (int q = 0; q < 4; ++q) a(q) = rng.gauss();
        a.normalize();
        for (int q = 0; q < 4; ++q) b(q) = rng.gauss();
        b -= b.dot(a) * a;
        b.normalize();
        UTPoint u{a, b};
        d_ptau = std::max(d_ptau, (ut_project(u) - ut_project(tau(u))).norm());
    }
    for (long i = 0; i < 1000; ++i) {
        Eigen::Vector4d a, b;  // tau-fixed: last coordinates zero
        for (int q = 0; q < 3; ++q) a(q) = rng.gauss();
        a(3) = 0;
        a.normalize();
        for (int q = 0; q < 3; ++q) b(q) = rng.gauss();
        b(3) = 0;
        b -= b.dot(a) * a;
        b.normalize();
        Eigen::VectorXd v = ut_project({a, b});
        double n1 = v.head(3).norm(), n2 = v.tail(3).norm();
        d_fix = std::max({d_fix, std::abs(n1 - 1 / std::sqrt(2.0)),
                          std::abs(n2 - 1 / std::sqrt(2.0)),
                          std::abs(v.head(3).dot(v.tail(3)))});
    }
    out.push_back(check_max("projection-tau-invariant", np, d_ptau, 1e-12));
    out.push_back(check_max("tau-fixed-locus-image", 1000, d_fix, 1e-10));

    // reconstruction round-trip
    long nr = cfg.get_count("cover_reconstruct", 10000);
    double d_lift = 0, d_round = 0, d_nu = 0;
    bool dims_ok = true;
    for (long i = 0; i < nr; ++i) {
        SurfaceRep rho = random_nonabelian_rep(rng);
        auto [rep, s] = reconstruct_sixtuple(rho, cfg.get_tol("tau_svd"));
        if (rep.dim != 2 || rep.x1_choices != X1Choices::PairPlusMinus) dims_ok = false;
        d_lift = std::max(d_lift, sixtuple_defect(s));
        SixTuple s2 = nu(s);
        d_lift = std::max(d_lift, sixtuple_defect(s2));
        ConjResult c1 = conj_equivalent(rep_word_list(pstar(s)), rep_word_list(rho));
        ConjResult c2 = conj_equivalent(rep_word_list(pstar(s2)), rep_word_list(rho));
        if (!c1.equivalent || !c2.equivalent) dims_ok = false;
        d_round = std::max({d_round, c1.residual, c2.residual});
        // the two lifts are nu-related but inequivalent as six-tuples
        std::vector<Quat> w1(s.x.begin(), s.x.end()), w2(s2.x.begin(), s2.x.end());
        ConjResult c3 = conj_equivalent(w1, w2, 1e-8);
        if (c3.equivalent) d_nu = 1.0;
    }
    out.push_back({"reconstruction-span-dim-2", nr, dims_ok ? 0.0 : 1.0, dims_ok});
    out.push_back(check_max("reconstruction-six-tuple-valid", nr, d_lift, 1e-9));
    out.push_back(check_max("reconstruction-round-trip", nr, d_round, 1e-8));
    out.push_back({"nu-lifts-distinct", nr, d_nu, d_nu == 0.0});

    // nu fixed points: binary dihedral six-tuples
    double d_dih = 0;
    bool dih_ok = true;
    for (long i = 0; i < 200; ++i) {
        double a[6];
        for (int q = 0; q < 5; ++q) a[q] = rng.uniform(0, TWO_PI);
        a[5] = a[0] - a[1] + a[2] - a[3] + a[4] - PI;  // forces product one
        SixTuple s;
        for (int q = 0; q < 6; ++q) s.x[q] = exp_k(a[q]) * Q_i;
        d_dih = std::max(d_dih, sixtuple_defect(s));
        std::vector<Quat> w1(s.x.begin(), s.x.end());
        SixTuple sn = nu(s);
        std::vector<Quat> w2(sn.x.begin(), sn.x.end());
        if (!conj_equivalent(w1, w2, 1e-8).equivalent) dih_ok = false;
    }
    out.push_back({"nu-fixes-binary-dihedral", 200, d_dih, dih_ok && d_dih < 1e-12});

    // quartic/quadratic split and the signature of Q
    long ns = cfg.get_count("cover_forms", 10000);
    double d_split = 0, d_real = 0;
    for (long i = 0; i < ns; ++i) {
        C4 z;
        for (int q = 0; q < 4; ++q) z[q] = {rng.gauss(), rng.gauss()};
        d_split = std::max(d_split, std::abs(s_form(z) - s_form_split(z)));
        C4 zr;
        for (int q = 0; q < 4; ++q) zr[q] = rng.gauss();
        d_real = std::max(d_real, std::abs(h_form(zr)));
    }
    out.push_back(check_max("quartic-split-identity", ns, d_split, 1e-12));
    out.push_back(check_max("h-vanishes-on-reals", ns, d_real, 1e-12));

    Eigen::Matrix4cd Qm;
    const std::complex<double> I(0, 1);
    Qm << 0.0 + 0.0 * I, -0.5 * I, 0.5 * I, -0.5 * I, 0.5 * I, 0.0 + 0.0 * I, -0.5 * I, 0.5 * I,
        -0.5 * I, 0.5 * I, 0.0 + 0.0 * I, -0.5 * I, 0.5 * I, -0.5 * I, 0.5 * I, 0.0 + 0.0 * I;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(Qm);
    int pos = 0, neg = 0;
    for (int q = 0; q < 4; ++q) {
        if (es.eigenvalues()(q) > 1e-12) ++pos;
        if (es.eigenvalues()(q) < -1e-12) ++neg;
    }
    out.push_back({"q-signature-zero", 1, double(std::abs(pos - neg)), pos == 2 && neg == 2});

    // bundle map spot check
    double d_m = 0;
    for (long i = 0; i < 1000; ++i) {
        UTPoint u = m_bundle(rng.random_unit(), rng.random_unit());
        d_m = std::max({d_m, std::abs(u.w1.norm() - 1), std::abs(u.w2.norm() - 1),
                        std::abs(u.w1.dot(u.w2))});
    }
    out.push_back(check_max("bundle-map-lands-in-ut", 1000, d_m, 1e-12));
    return out;
}

// ---- lagr ----------------------------------------------------------------

inline std::vector<CheckResult> suite_lagr(const Config& cfg) {
    std::vector<CheckResult> out;
    Rng rng(cfg.seed);

    // pillowcase relation and sigma0 invariance
    double d_rel = 0, d_xi = 0;
    for (long i = 0; i < 1000; ++i) {
        double g = rng.uniform(-7, 7), t = rng.uniform(-7, 7);
        FourTuple f = xi(g, t);
        d_rel = std::max(d_rel, fourtuple_defect(f));
        FourTuple f2 = xi(-g, -t);
        ConjResult cr = conj_equivalent(std::vector<Quat>{f.a, f.b, f.c, f.d},
                                        std::vector<Quat>{f2.a, f2.b, f2.c, f2.d}, 1e-8);
        if (!cr.equivalent) d_xi = 1.0;
        d_xi = std::max(d_xi, cr.residual);
    }
    out.push_back(check_max("xi-relation-exact", 1000, d_rel, 1e-12));
    out.push_back(check_max("xi-sigma0-invariant", 1000, d_xi, 1e-8));

    // L family: validity, kappa, boundary traces, G-invariance
    long n = cfg.get_count("lagr_L", 10000);
    double d_valid = 0, d_kap = 0, d_tr = 0, d_g = 0;
    for (long i = 0; i < n; ++i) {
        LagrParam p{rng.uniform(-7, 7), rng.uniform(-7, 7), rng.uniform(0, TWO_PI),
                    rng.uniform(0, TWO_PI)};
        SurfaceRep r = L_param(p);
        d_valid = std::max(d_valid, relator_defect(r));
        d_kap = std::max(d_kap, std::abs(re(commutator(r.Rm, r.Sm)) -
                                         std::cos(p.gamma - p.theta)));
        d_tr = std::max({d_tr, std::abs(re(r.Rm)), std::abs(re(r.Sp))});
        for (auto gen : {sigma0, sigma1, sigma2}) {
            ConjResult cr = conj_equivalent(L_param(gen(p)), r, 1e-8);
            if (!cr.equivalent) d_g = 1.0;
            d_g = std::max(d_g, cr.residual);
        }
    }
    out.push_back(check_max("L-relator-valid", n, d_valid, 1e-10));
    out.push_back(check_max("L-kappa-cos-gamma-theta", n, d_kap, 1e-12));
    out.push_back(check_max("L-boundary-traces-zero", n, d_tr, 1e-12));
    out.push_back(check_max("L-G-invariance", 3 * n, d_g, 1e-8));

    // fiber degenerations at the two special corners, tori elsewhere
    bool fib_ok = fiber_type(0, PI) == FiberType::Circle &&
                  fiber_type(PI, 0) == FiberType::Circle &&
                  fiber_type(0, 0) == FiberType::Torus && fiber_type(PI, PI) == FiberType::Torus;
    double d_circ = 0;
    for (long i = 0; i < 64; ++i) {
        double a = rng.uniform(0, TWO_PI), b = rng.uniform(0, TWO_PI),
               mu = rng.uniform(0, TWO_PI);
        ConjResult c1 = conj_equivalent(L_param({0, PI, a, b}), L_param({0, PI, a + mu, b + mu}),
                                        1e-8);
        ConjResult c2 = conj_equivalent(L_param({PI, 0, a, b}), L_param({PI, 0, a + mu, b - mu}),
                                        1e-8);
        if (!c1.equivalent || !c2.equivalent) fib_ok = false;
        d_circ = std::max({d_circ, c1.residual, c2.residual});
    }
    // ten generic base points: fiber tori do not degenerate
    for (long i = 0; i < 10; ++i) {
        double g = rng.uniform(0.3, PI - 0.3), t = rng.uniform(0.3, PI - 0.3);
        if (fiber_type(g, t) != FiberType::Torus) fib_ok = false;
        for (int a = 0; a < 6 && fib_ok; ++a)
            for (int b = 0; b < 6 && fib_ok; ++b) {
                if (a == 0 && b == 0) continue;
                ConjResult cr = conj_equivalent(
                    L_param({g, t, 0, 0}), L_param({g, t, a * 1.0, b * 1.0}), 1e-8);
                if (cr.equivalent) fib_ok = false;
            }
    }
    out.push_back({"fiber-degenerations", 64 + 10, d_circ, fib_ok && d_circ < 1e-8});

    // twist flow: kappa preserved, additive, 2pi-trivial, constant lambda
    long nt = cfg.get_count("lagr_twist", 10000);
    double d_tk = 0, d_add = 0, d_2pi = 0;
    for (long i = 0; i < nt; ++i) {
        SurfaceRep rho = random_nonabelian_rep(rng);
        if (std::abs(kappa(rho)) > 1.0 - 1e-3) continue;
        double th = rng.uniform(0, TWO_PI), ph = rng.uniform(0, TWO_PI);
        SurfaceRep r1 = twist_flow(rho, th);
        d_tk = std::max(d_tk, std::abs(kappa(r1) - kappa(rho)));
        SurfaceRep r2 = twist_flow(r1, ph), r3 = twist_flow(rho, th + ph);
        double dd = 0;
        auto wa = rep_words(r2), wb = rep_words(r3);
        for (int w = 0; w < 10; ++w) dd = std::max(dd, dist(wa[w], wb[w]));
        d_add = std::max(d_add, dd);
        if (i < 200) {
            ConjResult cr = conj_equivalent(twist_flow(rho, TWO_PI), rho, 1e-8);
            if (!cr.equivalent) d_2pi = 1.0;
            d_2pi = std::max(d_2pi, cr.residual);
        }
    }
    out.push_back(check_max("twist-preserves-kappa", nt, d_tk, 1e-12));
    out.push_back(check_max("twist-flow-additive", nt, d_add, 1e-10));
    out.push_back(check_max("twist-2pi-trivial", 200, d_2pi, 1e-8));

    double d_lam = 0;
    StepCtrl ctrl;
    for (long i = 0; i < 25; ++i) {
        SurfaceRep rho = random_nonabelian_rep(rng);
        if (std::abs(kappa(rho)) > 0.9) continue;
        LambdaCoords l0 = lambda_coords(rho, 1e-3, ctrl);
        LambdaCoords l1 = lambda_coords(twist_flow(rho, rng.uniform(0, TWO_PI)), 1e-3, ctrl);
        d_lam = std::max({d_lam, (l0.sigma_minus - l1.sigma_minus).norm(),
                          (l0.sigma_plus - l1.sigma_plus).norm(), std::abs(l0.t - l1.t)});
    }
    out.push_back(check_max("twist-orbit-constant-lambda", 25, d_lam, 1e-5));

    // perturbation formulas for the two perturbed example families
    double d_pc = 0, d_pe = 0, d_ph = 0;
    for (double eps : {0.01, 0.05, 0.1}) {
        for (int i = 0; i <= 200; ++i) {
            double t = TWO_PI * i / 200;
            SurfaceRep rc = L_param({t, t + PI / 2 - 2 * eps * std::sin(t), 0.3, 1.1});
            d_pc = std::max(d_pc, std::abs(kappa(rc) - std::cos(PI / 2 - 2 * eps * std::sin(t))));
            SurfaceRep re_ = L_param({PI / 2 + t + eps * std::sin(t),
                                      PI / 2 + t - eps * std::sin(t), 0.7, 2.2});
            d_pe = std::max(d_pe, std::abs(kappa(re_) - std::cos(2 * eps * std::sin(t))));
            auto [g2, t2] = perturb_H(t, t + PI / 2, eps);
            d_ph = std::max(d_ph,
                            std::abs(t2 - (t + PI / 2 - 2 * eps * std::sin(t))) +
                                std::abs(g2 - t));
        }
    }
    out.push_back(check_max("perturbed-kappa-example-c", 3 * 201, d_pc, 1e-10));
    out.push_back(check_max("perturbed-kappa-example-e", 3 * 201, d_pe, 1e-10));
    out.push_back(check_max("perturbation-shear-formula", 3 * 201, d_ph, 1e-14));

    // Psi: top level set and its involutions
    long npsi = cfg.get_count("lagr_psi", 10000);
    double d_pk = 0, d_inv = 0;
    for (long i = 0; i < npsi; ++i) {
        double am = rng.uniform(0, TWO_PI), bm = rng.uniform(0, TWO_PI),
               ap = rng.uniform(0, TWO_PI), bp = rng.uniform(0, TWO_PI),
               ga = rng.uniform(0, PI);
        SurfaceRep r = psi_param(am, bm, ap, bp, ga);
        d_pk = std::max({d_pk, relator_defect(r), std::abs(kappa(r) - 1.0)});
        ConjResult c1 = conj_equivalent(psi_param(-am, -bm, -ap, -bp, ga), r, 1e-8);
        ConjResult c2 = conj_equivalent(psi_param(am, bm, -ap, -bp, PI - ga), r, 1e-8);
        if (!c1.equivalent || !c2.equivalent) d_inv = 1.0;
        d_inv = std::max({d_inv, c1.residual, c2.residual});
    }
    out.push_back(check_max("psi-kappa-one", npsi, d_pk, 1e-10));
    out.push_back(check_max("psi-involutions", npsi, d_inv, 1e-8));

    // hemisphere representatives: relator on a 64x64 grid, equator gluing
    double d_a = 0, d_eq = 0;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            double a = (PI / 2) * i / 63.0, th = TWO_PI * j / 64.0;
            d_a = std::max({d_a, relator_defect(sphere_A(1, a, th)),
                            relator_defect(sphere_A(2, a, th))});
        }
    for (int j = 0; j < 32; ++j) {
        double th = TWO_PI * j / 32.0;
        ConjResult cr =
            conj_equivalent(sphere_A(1, PI / 2, th), sphere_A(2, PI / 2, -th), 1e-8);
        if (!cr.equivalent) d_eq = 1.0;
        d_eq = std::max(d_eq, cr.residual);
    }
    out.push_back(check_max("hemisphere-relator-grid", 64 * 64, d_a, 1e-9));
    out.push_back(check_max("hemisphere-equator-gluing", 32, d_eq, 1e-8));

    // correspondence descriptors for the example multicurves
    bool corr_ok = true;
    {
        auto da = correspondence(preset_multicurve("example-a"));
        auto db = correspondence(preset_multicurve("example-b"));
        auto dd = correspondence(preset_multicurve("example-d"));
        Multicurve cyl;  // diagonal arc between the two abelian corners
        CurvePiece pc;
        pc.type = PieceType::Arc;
        for (int i = 0; i <= 64; ++i) pc.samples.push_back({PI * i / 64.0, PI * i / 64.0});
        cyl.pieces.push_back(pc);
        auto dc = correspondence(cyl);
        corr_ok = da.size() == 1 && da[0] == LagrDescriptor::SolidTorus && db.size() == 1 &&
                  db[0] == LagrDescriptor::Torus3 && dd.size() == 1 &&
                  dd[0] == LagrDescriptor::LensSpace && dc.size() == 1 &&
                  dc[0] == LagrDescriptor::Cylinder;
        auto df = correspondence(double_multicurve(preset_multicurve("example-a")));
        corr_ok = corr_ok && df.size() == 1 && df[0] == LagrDescriptor::Torus3;
    }
    out.push_back({"correspondence-descriptors", 5, corr_ok ? 0.0 : 1.0, corr_ok});

    // Heegaard intersection: perturbed count and alpha formula
    {
        int grid = static_cast<int>(cfg.get_count("intersect_grid", 16));
        IntersectionReport r = intersect_heegaard(0.05, grid, grid, grid,
                                                  cfg.get_tol("newton_tol"));
        double margin_min = cfg.get_tol("margin_min");
        bool ok = r.isolated_points.size() == 8 && r.circle_components.empty();
        double d_alpha = 0, worst_res = 0, worst_margin = 1e300;
        for (const auto& p : r.isolated_points) {
            worst_res = std::max(worst_res, p.residual);
            worst_margin = std::min(worst_margin, p.margin);
            double want = PI / 4 + 0.05 * std::sin(p.t) - p.t / 2;
            double d = std::fmod(std::abs(p.alpha - want), PI);
            d_alpha = std::max(d_alpha, std::min(d, PI - d));
            double db = std::fmod(std::abs(p.beta - want), PI);
            d_alpha = std::max(d_alpha, std::min(db, PI - db));
        }
        ok = ok && worst_margin > margin_min && d_alpha < 1e-6 && worst_res < 1e-9;
        out.push_back({"heegaard-8-points", static_cast<long>(r.isolated_points.size()),
                       d_alpha, ok});
    }
    {
        int grid = static_cast<int>(cfg.get_count("intersect_grid", 16));
        IntersectionReport r =
            intersect_heegaard(0.0, grid, grid, grid, cfg.get_tol("newton_tol"));
        bool ok = r.circle_components.size() == 4 && r.isolated_points.empty();
        out.push_back({"heegaard-4-circles", static_cast<long>(r.circle_components.size()),
                       ok ? 0.0 : 1.0, ok});
    }
    return out;
}

// ---- cp3 -----------------------------------------------------------------

inline std::vector<CheckResult> suite_cp3(const Config& cfg) {
    std::vector<CheckResult> out;
    Rng rng(cfg.seed);

    CP3Point p0;
    p0 << 1, 0, 0, 0;
    CP3Point p1;
    p1 << 1.0 / std::sqrt(2.0), std::complex<double>(0, 1.0 / std::sqrt(2.0)), 0, 0;
    double t = 1.0 / std::sqrt(3.0);
    CP3Point p2;
    p2 << 1, std::complex<double>(0, t), 0, 0;
    p2.normalize();
    double d_fix = std::max({std::abs(kappa_cp3(p0) + 1.0), std::abs(kappa_cp3(p1) - 1.0),
                             std::abs(kappa_cp3(p2) - 0.5)});
    out.push_back(check_max("kappa-fixed-values", 3, d_fix, 1e-12));

    long n = cfg.get_count("cp3_inv", 10000);
    double d_so4 = 0, d_phase = 0, d_range = 0;
    for (long i = 0; i < n; ++i) {
        CP3Point z = random_cp3(rng);
        Eigen::Matrix4d M = random_so4(rng);
        d_so4 = std::max(d_so4, std::abs(kappa_cp3(apply_so4(M, z)) - kappa_cp3(z)));
        double ph = rng.uniform(0, TWO_PI);
        CP3Point zp = std::complex<double>(std::cos(ph), std::sin(ph)) * z;
        d_phase = std::max(d_phase, std::abs(kappa_cp3(zp) - kappa_cp3(z)));
    }
    out.push_back(check_max("kappa-so4-invariant", n, d_so4, 1e-12));
    out.push_back(check_max("kappa-phase-invariant", n, d_phase, 1e-12));

    long nr = cfg.get_count("cp3_range", 1000000);
    for (long i = 0; i < nr; ++i) {
        double k = kappa_cp3(random_cp3(rng));
        d_range = std::max({d_range, k - 1.0, -1.0 - k});
    }
    out.push_back(check_max("kappa-range", nr, d_range, 1e-12));

    long ng = cfg.get_count("cp3_grad", 100000);
    double g_mid_min = 1e300;
    long mid = 0;
    while (mid < ng) {
        CP3Point z = random_cp3(rng);
        double k = kappa_cp3(z);
        if (k < -0.9 || k > 0.9) continue;
        g_mid_min = std::min(g_mid_min, grad_norm_cp3(z));
        ++mid;
    }
    out.push_back({"gradient-nonzero-mid-levels", ng, g_mid_min, g_mid_min > 1e-3});

    double g_ext_max = 0;
    for (long i = 0; i < 500; ++i) g_ext_max = std::max(g_ext_max, grad_norm_cp3(random_real_point(rng)));
    for (long i = 0; i < 500; ++i)
        g_ext_max = std::max(g_ext_max, grad_norm_cp3(random_quadric_point(rng)));
    out.push_back({"gradient-zero-extremal-loci", 1000, g_ext_max, g_ext_max < 1e-6});
    return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const Config& cfg) {
    if (name == "quat") return suite_quat(cfg);
    if (name == "repvar") return suite_repvar(cfg);
    if (name == "pillow") return suite_pillow(cfg);
    if (name == "cover") return suite_cover(cfg);
    if (name == "lagr") return suite_lagr(cfg);
    if (name == "cp3") return suite_cp3(cfg);
    throw std::domain_error("unknown suite: " + name);
}

}  // namespace genus2
