#pragma once

// Pillowcase coordinates for the 4-punctured sphere, the Lagrangian family
// L with its G-action and fiber degenerations, the holonomy perturbation
// shear, the twist flow, the multicurve correspondence, the Heegaard
// intersection solver, and the parametrized homology representatives.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "genus2/pillow.hpp"
#include "genus2/quat.hpp"
#include "genus2/repvar.hpp"

namespace genus2 {

constexpr double PI = 3.14159265358979323846;
constexpr double TWO_PI = 6.28318530717958647692;

inline Quat exp_k(double t) { return exp_im({0, 0, 1}, t); }
inline Quat exp_i(double t) { return exp_im({1, 0, 0}, t); }

// Pillowcase meridian images: a -> i, b -> e^{gamma k} i, c -> e^{theta k} i,
// d -> e^{(theta-gamma) k} i; the relation ba = cd holds identically.
inline FourTuple xi(double gamma, double theta) {
    return {Q_i, exp_k(gamma) * Q_i, exp_k(theta) * Q_i, exp_k(theta - gamma) * Q_i};
}

struct LagrParam {
    double gamma{0}, theta{0}, alpha{0}, beta{0};
};

// The Lagrangian family
//   L(g,t,a,b) = (-e^{g k} i,
//                 e^{(t-g)/2 k} e^{(t/2+a) P},   P = e^{g k} i = cos g i + sin g j,
//                 e^{(t-g)/2 k} e^{(t/2+b) i},
//                 i).
inline SurfaceRep L_param(const LagrParam& p) {
    Vec3 P{std::cos(p.gamma), std::sin(p.gamma), 0};
    Quat half = exp_k(0.5 * (p.theta - p.gamma));
    return {-(exp_k(p.gamma) * Q_i), half * exp_im(P, 0.5 * p.theta + p.alpha),
            half * exp_im({1, 0, 0}, 0.5 * p.theta + p.beta), Q_i};
}

// Generators of the G-action on (gamma, theta, alpha, beta); L is invariant
// on conjugacy classes under each.
inline LagrParam sigma0(const LagrParam& p) {
    return {-p.gamma, -p.theta, p.alpha + p.theta, p.beta + p.theta};
}
inline LagrParam sigma1(const LagrParam& p) {
    return {p.gamma + TWO_PI, p.theta, p.alpha + PI, p.beta + PI};
}
inline LagrParam sigma2(const LagrParam& p) {
    return {p.gamma, p.theta + TWO_PI, p.alpha, p.beta};
}

inline double wrap_2pi(double x) {
    double r = std::fmod(x, TWO_PI);
    if (r < 0) r += TWO_PI;
    return r;
}

// Canonical base coordinates: gamma in [0, pi], theta in [0, 2pi), with the
// extra fold theta -> 2pi - theta on the walls sin(gamma) = 0.
inline std::pair<double, double> canonical_pillowcase(double gamma, double theta) {
    double g = std::fmod(gamma, TWO_PI);
    if (g < 0) g += TWO_PI;
    double t = theta;
    if (g > PI + 1e-15) {  // reflect (g,t) -> (2pi - g, -t)
        g = TWO_PI - g;
        t = -t;
    }
    t = wrap_2pi(t);
    if (std::min(g, PI - g) < 1e-12 && t > PI + 1e-15) t = TWO_PI - t;
    return {g, t};
}

enum class FiberType { Torus, Circle };

// The fiber of the boundary restriction over xi(gamma, theta): a circle over
// the two corners xi(0,pi) and xi(pi,0), a torus everywhere else.
inline FiberType fiber_type(double gamma, double theta, double tol = 1e-8) {
    auto [g, t] = canonical_pillowcase(gamma, theta);
    auto near = [&](double a, double b) {
        return std::abs(g - a) < tol && std::abs(t - b) < tol;
    };
    return (near(0, PI) || near(PI, 0)) ? FiberType::Circle : FiberType::Torus;
}

// Axis of the twist flow: the normalized imaginary part of the separating-
// curve holonomy.
inline Vec3 twist_axis(const SurfaceRep& rho, double delta = 1e-6) {
    double ka = kappa(rho);
    if (std::abs(ka) > 1.0 - delta)
        throw std::domain_error("twist_flow: kappa too close to +-1");
    Vec3 v = im(commutator(rho.Rm, rho.Sm));
    return v * (1.0 / std::sqrt(1.0 - ka * ka));
}

// Modified twist flow: conjugate only the (+)-side images by e^{theta I(rho)}.
inline SurfaceRep twist_flow(const SurfaceRep& rho, double theta, double delta = 1e-6) {
    Quat g = exp_im(twist_axis(rho, delta).normalized(), theta);
    return {rho.Rm, rho.Sm, rotate(g, rho.Rp), rotate(g, rho.Sp)};
}

// Holonomy perturbation shear of the pillowcase.
inline std::pair<double, double> perturb_H(double gamma, double theta, double eps) {
    return {gamma, theta - 2.0 * eps * std::sin(gamma)};
}

// --- multicurves and the correspondence ---------------------------------

enum class PieceType { Circle, Arc };

struct CurvePiece {
    PieceType type = PieceType::Circle;
    std::vector<std::pair<double, double>> samples;  // (gamma, theta) along the piece
};

struct Multicurve {
    std::vector<CurvePiece> pieces;
};

enum class LagrDescriptor { Torus3, LensSpace, Cylinder, SolidTorus };

inline const char* descriptor_name(LagrDescriptor d) {
    switch (d) {
        case LagrDescriptor::Torus3: return "three-torus";
        case LagrDescriptor::LensSpace: return "lens-space";
        case LagrDescriptor::Cylinder: return "cylinder";
        default: return "solid-torus";
    }
}

// Corner classification: {xi(0,pi), xi(pi,0)} have circle fibers,
// {xi(0,0), xi(pi,pi)} carry the abelian tori.
enum class CornerKind { CircleDegenerate, AbelianTorus };

inline CornerKind corner_kind(double gamma, double theta, double tol = 1e-8) {
    auto [g, t] = canonical_pillowcase(gamma, theta);
    auto near = [&](double a, double b) {
        return std::abs(g - a) < tol && std::abs(t - b) < tol;
    };
    if (near(0, PI) || near(PI, 0)) return CornerKind::CircleDegenerate;
    if (near(0, 0) || near(PI, PI)) return CornerKind::AbelianTorus;
    throw std::domain_error("corner_kind: arc endpoint is not at a corner");
}

// Total space of the family over each multicurve piece.
inline std::vector<LagrDescriptor> correspondence(const Multicurve& m) {
    std::vector<LagrDescriptor> out;
    for (const auto& piece : m.pieces) {
        if (piece.samples.size() < 2)
            throw std::domain_error("correspondence: piece needs at least two samples");
        if (piece.type == PieceType::Circle) {
            out.push_back(LagrDescriptor::Torus3);
            continue;
        }
        CornerKind k0 = corner_kind(piece.samples.front().first, piece.samples.front().second);
        CornerKind k1 = corner_kind(piece.samples.back().first, piece.samples.back().second);
        if (k0 == CornerKind::CircleDegenerate && k1 == CornerKind::CircleDegenerate)
            out.push_back(LagrDescriptor::LensSpace);
        else if (k0 == CornerKind::AbelianTorus && k1 == CornerKind::AbelianTorus)
            out.push_back(LagrDescriptor::Cylinder);
        else
            out.push_back(LagrDescriptor::SolidTorus);
    }
    return out;
}

inline CurvePiece sampled_piece(PieceType type, double t0, double t1, int n,
                                double (*g)(double, double), double (*t)(double, double),
                                double eps) {
    CurvePiece p;
    p.type = type;
    for (int i = 0; i <= n; ++i) {
        double u = t0 + (t1 - t0) * i / n;
        p.samples.push_back({g(u, eps), t(u, eps)});
    }
    return p;
}

// Named example multicurves.
inline Multicurve preset_multicurve(const std::string& name, double eps = 0.05, int n = 256) {
    Multicurve m;
    CurvePiece p;
    auto line = [&](PieceType ty, double u0, double u1, auto gf, auto tf) {
        CurvePiece q;
        q.type = ty;
        for (int i = 0; i <= n; ++i) {
            double u = u0 + (u1 - u0) * i / n;
            q.samples.push_back({gf(u), tf(u)});
        }
        return q;
    };
    if (name == "example-a") {  // vertical arc from xi(pi,0) to xi(pi,pi)
        m.pieces.push_back(line(PieceType::Arc, 0.0, PI, [](double) { return PI; },
                                [](double u) { return u; }));
    } else if (name == "example-b") {  // embedded circle, slope-one offset pi/2
        m.pieces.push_back(line(PieceType::Circle, 0.0, TWO_PI, [](double u) { return u; },
                                [](double u) { return u + PI / 2; }));
    } else if (name == "example-c") {  // example-b sheared by the perturbation
        m.pieces.push_back(line(PieceType::Circle, 0.0, TWO_PI, [](double u) { return u; },
                                [eps](double u) { return u + PI / 2 - 2 * eps * std::sin(u); }));
    } else if (name == "example-d") {  // diagonal arc from xi(0,pi) to xi(pi,2pi)
        m.pieces.push_back(line(PieceType::Arc, 0.0, PI, [](double u) { return u; },
                                [](double u) { return u + PI; }));
    } else if (name == "example-e") {  // figure-eight immersed circle
        m.pieces.push_back(line(
            PieceType::Circle, 0.0, TWO_PI,
            [eps](double u) { return PI / 2 + u + eps * std::sin(u); },
            [eps](double u) { return PI / 2 + u - eps * std::sin(u); }));
    } else if (name == "example-f") {
        // bypass doubling applied to the example-a arc: one circle supported
        // near the arc (descriptor-level only)
        m.pieces.push_back(line(
            PieceType::Circle, 0.0, TWO_PI,
            [eps](double u) { return PI - eps * std::sin(u); },
            [](double u) { return PI / 2 + (PI / 2 - 0.1) * (-std::cos(u)); }));
    } else {
        throw std::domain_error("unknown multicurve preset: " + name);
    }
    return m;
}

// Doubling operator on multicurves: circles are doubled (two parallel
// copies); arcs become a single circle supported near the arc.
inline Multicurve double_multicurve(const Multicurve& m, double eps = 0.02) {
    Multicurve out;
    for (const auto& piece : m.pieces) {
        if (piece.type == PieceType::Circle) {
            out.pieces.push_back(piece);
            out.pieces.push_back(piece);
            continue;
        }
        CurvePiece c;
        c.type = PieceType::Circle;
        int n = static_cast<int>(piece.samples.size()) - 1;
        for (int i = 0; i <= 2 * n; ++i) {
            // traverse the interior forward then back, offset transversely
            double u = PI * i / n;  // in [0, 2pi]
            double s = 0.5 * (1.0 - std::cos(u));  // in [0,1], interior except endpoints
            s = 0.02 + 0.96 * s;
            double idx = s * n;
            int j = std::min(n - 1, static_cast<int>(idx));
            double frac = idx - j;
            double g = piece.samples[j].first * (1 - frac) + piece.samples[j + 1].first * frac;
            double t = piece.samples[j].second * (1 - frac) + piece.samples[j + 1].second * frac;
            double dg = piece.samples[j + 1].first - piece.samples[j].first;
            double dt = piece.samples[j + 1].second - piece.samples[j].second;
            double nn = std::hypot(dg, dt);
            double off = eps * std::sin(u);
            c.samples.push_back({g - off * dt / nn, t + off * dg / nn});
        }
        out.pieces.push_back(c);
    }
    return out;
}

// --- homology representatives -------------------------------------------

// Psi lands in the top level set kappa = 1: each side abelian, the (+)-side
// torus tilted by gamma.
inline SurfaceRep psi_param(double am, double bm, double ap, double bp, double gamma) {
    if (gamma < -1e-12 || gamma > PI + 1e-12)
        throw std::domain_error("psi_param: gamma outside [0, pi]");
    Quat g = exp_k(0.5 * gamma);
    return {exp_i(am), exp_i(bm), rotate(g, exp_i(ap)), rotate(g, exp_i(bp))};
}

// First hemisphere sphere representative:
//   A1(alpha, theta) = (e^{a i}, e^{a j}, g e^{a j} g^{-1}, g e^{a i} g^{-1}),
//   g = e^{theta I(alpha)},  I(alpha) = (sin a, -sin a, cos a)/norm.
// The relator holds for all alpha in [0, pi].
inline SurfaceRep sphere_A1(double alpha, double theta) {
    Vec3 I = Vec3{std::sin(alpha), -std::sin(alpha), std::cos(alpha)}.normalized();
    Quat g = exp_im(I, theta);
    Quat A = exp_i(alpha), B = exp_im({0, 1, 0}, alpha);
    return {A, B, rotate(g, B), rotate(g, A)};
}

// Second hemisphere, glued to the first along the equator:
// A2(alpha, theta) = A1(pi - alpha, -theta), so A2(pi/2, -theta) = A1(pi/2, theta)
// exactly and the apex A2(0, .) is the central class (-1,-1,-1,-1).
inline SurfaceRep sphere_A2(double alpha, double theta) {
    return sphere_A1(PI - alpha, -theta);
}

inline SurfaceRep sphere_A(int hemisphere, double alpha, double theta) {
    if (alpha < -1e-12 || alpha > PI / 2 + 1e-12)
        throw std::domain_error("sphere_A: alpha outside [0, pi/2]");
    if (hemisphere == 1) return sphere_A1(alpha, theta);
    if (hemisphere == 2) return sphere_A2(alpha, theta);
    throw std::domain_error("sphere_A: hemisphere must be 1 or 2");
}

// --- the Heegaard intersection solver -----------------------------------

// First Lagrangian: the perturbed family of Example (c).
inline SurfaceRep i1_eps(double eps, double t, double alpha, double beta) {
    return L_param({t, t + PI / 2 - 2 * eps * std::sin(t), alpha, beta});
}

// Second Lagrangian: the generator swap applied to the unperturbed family.
inline SurfaceRep i2_map(double t, double alpha, double beta) {
    SurfaceRep r = L_param({t, t + PI / 2, alpha, beta});
    return {r.Sm, r.Rm, r.Sp, r.Rp};
}

struct IntersectionPoint {
    double t{0}, alpha{0}, beta{0};          // i1 parameters
    double t2{0}, alpha2{0}, beta2{0};       // matched i2 parameters
    double residual{0};
    double margin{0};                        // smallest singular value of the residual Jacobian
};

struct CircleComponent {
    std::vector<IntersectionPoint> samples;  // traced loop, ordered
};

struct IntersectionReport {
    std::vector<IntersectionPoint> isolated_points;
    std::vector<CircleComponent> circle_components;
    long seeds_converged = 0;
    bool cluster_ambiguity = false;
};

namespace detail {

// 40-component conjugacy residual between i1(x[0..2]) and i2(x[3..5]):
// the ten fingerprint words of both reps, optimally aligned, componentwise.
inline Eigen::VectorXd heegaard_residual(double eps, const Eigen::Matrix<double, 6, 1>& x) {
    SurfaceRep r1 = i1_eps(eps, x(0), x(1), x(2));
    SurfaceRep r2 = i2_map(x(3), x(4), x(5));
    auto w1 = rep_words(r1), w2 = rep_words(r2);
    ConjResult cr = conj_equivalent(std::vector<Quat>(w1.begin(), w1.end()),
                                    std::vector<Quat>(w2.begin(), w2.end()), 1e300);
    Eigen::VectorXd r(40);
    for (int i = 0; i < 10; ++i) {
        Quat d = rotate(cr.g, w1[i]) - w2[i];
        r(4 * i) = d.a;
        r(4 * i + 1) = d.b;
        r(4 * i + 2) = d.c;
        r(4 * i + 3) = d.d;
    }
    return r;
}

// Central differences: the truncation error of a one-sided Jacobian would
// be comparable to the null-space threshold used for circle detection.
inline Eigen::MatrixXd heegaard_jacobian(double eps, const Eigen::Matrix<double, 6, 1>& x,
                                         double h = 1e-5) {
    Eigen::MatrixXd J(40, 6);
    for (int j = 0; j < 6; ++j) {
        Eigen::Matrix<double, 6, 1> xp = x, xm = x;
        xp(j) += h;
        xm(j) -= h;
        J.col(j) = (heegaard_residual(eps, xp) - heegaard_residual(eps, xm)) / (2 * h);
    }
    return J;
}

// Damped Gauss-Newton; returns true if the residual norm reached tol.
inline bool heegaard_gn(double eps, Eigen::Matrix<double, 6, 1>& x, double tol,
                        int max_iter = 60) {
    Eigen::VectorXd r = heegaard_residual(eps, x);
    double rn = r.norm();
    for (int it = 0; it < max_iter; ++it) {
        if (rn < tol) return true;
        if (it == 15 && rn > 1e-3) return false;  // hopeless seed
        Eigen::MatrixXd J = heegaard_jacobian(eps, x);
        Eigen::Matrix<double, 6, 1> step =
            J.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(r);
        double lam = 1.0;
        bool improved = false;
        for (int ls = 0; ls < 25; ++ls) {
            Eigen::Matrix<double, 6, 1> xn = x - lam * step;
            Eigen::VectorXd rn2 = heegaard_residual(eps, xn);
            if (rn2.norm() < rn) {
                x = xn;
                r = rn2;
                rn = rn2.norm();
                improved = true;
                break;
            }
            lam *= 0.5;
        }
        if (!improved) return rn < tol;
    }
    return rn < tol;
}

inline double class_distance(const SurfaceRep& a, const SurfaceRep& b) {
    auto fa = fingerprint(a), fb = fingerprint(b);
    double d = 0;
    for (int i = 0; i < 10; ++i) d = std::max(d, std::abs(fa[i] - fb[i]));
    if (d > 0.5) return d;  // fingerprints already separate them decisively
    ConjResult cr = conj_equivalent(a, b, 1e300);
    return std::max(d, cr.residual);
}

}  // namespace detail

// Solve for the intersection of the two Lagrangian 3-tori.  Grid seeding on
// the i1 parameters with a coarse fingerprint-matched partner guess, then
// Gauss-Newton on the 40-component conjugacy residual; components are
// classified by the null space of the residual Jacobian (0 null directions:
// transverse point; 1: circle, traced to closure by continuation).
inline IntersectionReport intersect_heegaard(double eps, int n_t = 16, int n_a = 16,
                                             int n_b = 16, double newton_tol = 1e-10) {
    if (std::abs(eps) >= 0.2) throw std::domain_error("intersect_heegaard: |eps| >= 0.2");
    if (n_t < 16 || n_a < 16 || n_b < 16)
        throw std::domain_error("intersect_heegaard: grid must be >= 16 per axis");

    // coarse table of i2 fingerprints for partner seeding
    const int pc = 12;
    std::vector<std::array<double, 10>> table(pc * pc * pc);
    std::vector<Eigen::Vector3d> table_xy(pc * pc * pc);
    for (int i = 0; i < pc; ++i)
        for (int j = 0; j < pc; ++j)
            for (int k = 0; k < pc; ++k) {
                double t = TWO_PI * i / pc, a = TWO_PI * j / pc, b = TWO_PI * k / pc;
                table[(i * pc + j) * pc + k] = fingerprint(i2_map(t, a, b));
                table_xy[(i * pc + j) * pc + k] = Eigen::Vector3d(t, a, b);
            }

    std::vector<Eigen::Matrix<double, 6, 1>> sols;
    IntersectionReport rep;
    for (int i = 0; i < n_t; ++i)
        for (int j = 0; j < n_a; ++j)
            for (int k = 0; k < n_b; ++k) {
                Eigen::Matrix<double, 6, 1> x;
                x(0) = TWO_PI * i / n_t;
                x(1) = TWO_PI * j / n_a;
                x(2) = TWO_PI * k / n_b;
                auto f1 = fingerprint(i1_eps(eps, x(0), x(1), x(2)));
                double best = 1e300;
                int bi = 0;
                for (int m = 0; m < pc * pc * pc; ++m) {
                    double d = 0;
                    for (int w = 0; w < 10; ++w) d += std::abs(f1[w] - table[m][w]);
                    if (d < best) {
                        best = d;
                        bi = m;
                    }
                }
                if (best > 2.5) continue;  // seed nowhere near the other torus
                x(3) = table_xy[bi](0);
                x(4) = table_xy[bi](1);
                x(5) = table_xy[bi](2);
                if (detail::heegaard_gn(eps, x, newton_tol)) {
                    ++rep.seeds_converged;
                    sols.push_back(x);
                }
            }

    // classify and cluster by conjugacy class
    std::vector<char> claimed(sols.size(), 0);
    auto rep_of = [&](const Eigen::Matrix<double, 6, 1>& x) {
        return i1_eps(eps, x(0), x(1), x(2));
    };
    // Wrapping t by 2pi shifts (alpha, beta) by -pi on the same conjugacy
    // class (the parameter torus is twisted), so wrap the triple jointly.
    auto wrap_triple = [](double& t, double& a, double& b) {
        double k = std::floor(t / TWO_PI);
        t -= TWO_PI * k;
        a = wrap_2pi(a - k * PI);
        b = wrap_2pi(b - k * PI);
    };
    auto make_point = [&](const Eigen::Matrix<double, 6, 1>& x) {
        IntersectionPoint p;
        p.t = x(0);
        p.alpha = x(1);
        p.beta = x(2);
        p.t2 = x(3);
        p.alpha2 = x(4);
        p.beta2 = x(5);
        wrap_triple(p.t, p.alpha, p.beta);
        wrap_triple(p.t2, p.alpha2, p.beta2);
        p.residual = detail::heegaard_residual(eps, x).norm();
        Eigen::MatrixXd J = detail::heegaard_jacobian(eps, x);
        p.margin = J.jacobiSvd().singularValues()(5);
        return p;
    };

    for (size_t s = 0; s < sols.size(); ++s) {
        if (claimed[s]) continue;
        IntersectionPoint p = make_point(sols[s]);
        int nullity = 0;
        {
            Eigen::MatrixXd J = detail::heegaard_jacobian(eps, sols[s]);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinV);
            for (int q = 0; q < 6; ++q)
                if (svd.singularValues()(q) < 1e-5) ++nullity;
            if (nullity == 0) {
                // isolated: claim every solution in the same class
                SurfaceRep me = rep_of(sols[s]);
                for (size_t u = s; u < sols.size(); ++u)
                    if (!claimed[u] && detail::class_distance(me, rep_of(sols[u])) < 1e-6)
                        claimed[u] = 1;
                rep.isolated_points.push_back(p);
                continue;
            }
            if (nullity > 1) {  // degenerate cluster; flag and claim just itself
                claimed[s] = 1;
                rep.cluster_ambiguity = true;
                continue;
            }
            // circle: trace by continuation along the null direction
            CircleComponent comp;
            SurfaceRep start = rep_of(sols[s]);
            Eigen::Matrix<double, 6, 1> x = sols[s];
            Eigen::Matrix<double, 6, 1> dir = svd.matrixV().col(5);
            const double h = 0.08;
            bool closed = false;
            for (int step = 0; step < 2000; ++step) {
                comp.samples.push_back(make_point(x));
                Eigen::Matrix<double, 6, 1> xn = x + h * dir;
                if (!detail::heegaard_gn(eps, xn, newton_tol)) break;
                // recompute the null direction, keep orientation
                Eigen::MatrixXd Jn = detail::heegaard_jacobian(eps, xn);
                Eigen::JacobiSVD<Eigen::MatrixXd> sv2(Jn, Eigen::ComputeThinV);
                Eigen::Matrix<double, 6, 1> nd = sv2.matrixV().col(5);
                if (nd.dot(dir) < 0) nd = -nd;
                x = xn;
                dir = nd;
                if (step > 20 && detail::class_distance(start, rep_of(x)) < 0.06) {
                    closed = true;
                    break;
                }
            }
            if (!closed) rep.cluster_ambiguity = true;
            // claim all solutions whose class lies on the traced circle
            for (size_t u = s; u < sols.size(); ++u) {
                if (claimed[u]) continue;
                SurfaceRep other = rep_of(sols[u]);
                // membership radius: generous against the sample spacing,
                // still far below the O(1) separation of distinct circles
                for (const auto& cs : comp.samples) {
                    SurfaceRep on = i1_eps(eps, cs.t, cs.alpha, cs.beta);
                    if (detail::class_distance(on, other) < 0.2) {
                        claimed[u] = 1;
                        break;
                    }
                }
            }
            claimed[s] = 1;
            rep.circle_components.push_back(std::move(comp));
        }
    }

    std::sort(rep.isolated_points.begin(), rep.isolated_points.end(),
              [](const IntersectionPoint& a, const IntersectionPoint& b) {
                  if (a.t != b.t) return a.t < b.t;
                  if (a.alpha != b.alpha) return a.alpha < b.alpha;
                  return a.beta < b.beta;
              });
    return rep;
}

}  // namespace genus2
