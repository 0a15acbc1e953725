#pragma once

// Branched covers: the projection p from the unit tangent bundle of S^n to
// S^{2n-1} with closed-form fibers, the deck involutions tau and nu, the
// cover pstar from six-tuples to genus-two representations, and the
// six-tuple reconstruction with its span report.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

#include "genus2/quat.hpp"
#include "genus2/repvar.hpp"

namespace genus2 {

// A point of UTS^n: orthonormal pair (w1, w2) in R^{n+1}.
struct UTPoint {
    Eigen::VectorXd w1, w2;
};

inline void check_ut(const UTPoint& u, double tol = 1e-10) {
    if (u.w1.size() != u.w2.size() || u.w1.size() < 2)
        throw std::domain_error("UTPoint: vector size mismatch");
    if (std::abs(u.w1.norm() - 1.0) > tol || std::abs(u.w2.norm() - 1.0) > tol ||
        std::abs(u.w1.dot(u.w2)) > tol)
        throw std::domain_error("UTPoint: not an orthonormal pair");
}

// tau reflects both vectors through the hyperplane of the last coordinate.
inline UTPoint tau(const UTPoint& u) {
    UTPoint v = u;
    v.w1(v.w1.size() - 1) *= -1;
    v.w2(v.w2.size() - 1) *= -1;
    return v;
}

// p(w1, w2) = (proj w1, proj w2) normalized, where proj drops the last
// coordinate; a unit vector in R^{2n}.
inline Eigen::VectorXd ut_project(const UTPoint& u) {
    check_ut(u);
    long n = u.w1.size() - 1;
    Eigen::VectorXd v(2 * n);
    v.head(n) = u.w1.head(n);
    v.tail(n) = u.w2.head(n);
    double nn = v.norm();
    if (nn < 1e-14) throw std::domain_error("ut_project: both projections vanish");
    return v / nn;
}

// The fiber of p over a unit v = (v1, v2): solutions (lambda, alpha, beta) of
//   lambda^2 (v1.v2) + alpha beta = 0,
//   alpha^2 = 1 - lambda^2 |v1|^2,  beta^2 = 1 - lambda^2 |v2|^2,
// with lambda^2 = 2 / (1 + sqrt(1 - 4A)), A = |v1|^2 |v2|^2 - (v1.v2)^2
// (the stable form of (1 - sqrt(1-4A)) / 2A).  The returned set is exactly
// one tau-orbit.
inline std::vector<UTPoint> ut_fiber(const Eigen::VectorXd& v, double tol = 1e-9) {
    if (v.size() % 2 != 0) throw std::domain_error("ut_fiber: odd-dimensional input");
    if (std::abs(v.norm() - 1.0) > 1e-6) throw std::domain_error("ut_fiber: input not unit");
    long n = v.size() / 2;
    Eigen::VectorXd v1 = v.head(n), v2 = v.tail(n);
    auto emb = [n](const Eigen::VectorXd& x, double last) {
        Eigen::VectorXd w(n + 1);
        w.head(n) = x;
        w(n) = last;
        return w;
    };
    std::vector<UTPoint> out;
    if (v1.norm() < 1e-13) {  // branch: w1 = +-e
        out.push_back({emb(v1, 1.0), emb(v2, 0.0)});
        out.push_back({emb(v1, -1.0), emb(v2, 0.0)});
        return out;
    }
    if (v2.norm() < 1e-13) {  // branch: w2 = +-e
        out.push_back({emb(v1, 0.0), emb(v2, 1.0)});
        out.push_back({emb(v1, 0.0), emb(v2, -1.0)});
        return out;
    }
    double dot = v1.dot(v2);
    double A = v1.squaredNorm() * v2.squaredNorm() - dot * dot;
    double disc = std::max(0.0, 1.0 - 4.0 * A);
    double lam2 = 2.0 / (1.0 + std::sqrt(disc));
    if (disc < 1e-12 && std::abs(lam2 * dot) < 1e-10) {
        // branch locus (|v1| = |v2| = 1/sqrt(2), v1.v2 = 0): alpha and beta
        // vanish but their generic formulas lose half the working precision,
        // so emit the single tau-fixed point directly
        Eigen::VectorXd w1 = emb(lam2 * v1, 0.0), w2 = emb(v2, 0.0);
        w1.normalize();
        w2 -= w2.dot(w1) * w1;
        w2.normalize();
        out.push_back({w1, w2});
        return out;
    }
    double lam = std::sqrt(lam2);
    double a2 = std::max(0.0, 1.0 - lam2 * v1.squaredNorm());
    double b2 = std::max(0.0, 1.0 - lam2 * v2.squaredNorm());
    double al = std::sqrt(a2), be = std::sqrt(b2);
    for (double sa : {1.0, -1.0})
        for (double sb : {1.0, -1.0}) {
            double alpha = sa * al, beta = sb * be;
            if (std::abs(lam2 * dot + alpha * beta) > 1e-10) continue;
            UTPoint u{emb(lam * v1, alpha), emb(lam * v2, beta)};
            bool dup = false;
            for (const auto& o : out)
                if ((o.w1 - u.w1).norm() + (o.w2 - u.w2).norm() < tol) dup = true;
            if (!dup) out.push_back(u);
        }
    return out;
}

// Slack of the fiber bound lambda^2 |v_i|^2 <= 1 (nonnegative in theory).
inline std::pair<double, double> lemma_bound_slack(const Eigen::VectorXd& v) {
    long n = v.size() / 2;
    Eigen::VectorXd v1 = v.head(n), v2 = v.tail(n);
    double dot = v1.dot(v2);
    double A = v1.squaredNorm() * v2.squaredNorm() - dot * dot;
    double lam2 = 2.0 / (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * A)));
    return {1.0 - lam2 * v1.squaredNorm(), 1.0 - lam2 * v2.squaredNorm()};
}

// nu negates all six meridian images (an even number of sign flips, so the
// product-one invariant is preserved).
inline SixTuple nu(const SixTuple& s) {
    SixTuple t;
    for (int i = 0; i < 6; ++i) t.x[i] = -s.x[i];
    return t;
}

// The cover pstar: six-tuple -> genus-two representation.
inline SurfaceRep pstar(const SixTuple& s, double tau_rel = 1e-9) {
    if (sixtuple_defect(s) > tau_rel) throw std::domain_error("pstar: invalid six-tuple");
    return {s.x[0] * s.x[1], conj(s.x[2]) * conj(s.x[1]), s.x[3] * s.x[4],
            conj(s.x[5]) * conj(s.x[4])};
}

enum class X1Choices { PairPlusMinus, Circle, Sphere };

struct SpanReport {
    int dim = 0;                     // rank of the span of the five test vectors
    std::vector<Vec3> basis;         // orthonormal basis of the span (size = dim)
    X1Choices x1_choices = X1Choices::Sphere;
    bool near_threshold = false;     // singular values straddle the rank cutoff
};

// Reconstruct a six-tuple lifting rho under pstar.  The span of the five
// imaginary test vectors has rank < 3; x1 is any unit vector orthogonal to
// it (for the generic rank-2 case, the normalized commutator direction of a
// non-commuting pair), and x2..x6 follow by the displayed products.  The
// second lift is nu of the first.
inline std::pair<SpanReport, SixTuple> reconstruct_sixtuple(const SurfaceRep& r,
                                                            double tau_svd = 1e-8,
                                                            double tau_rel = 1e-9) {
    if (relator_defect(r) > tau_rel)
        throw std::domain_error("reconstruct_sixtuple: relator defect too large");
    const Quat &Rm = r.Rm, &Sm = r.Sm, &Rp = r.Rp, &Sp = r.Sp;
    std::array<Vec3, 5> W = {im(Rm), im(conj(Sm) * conj(Rm)), im(Sp * Sm),
                             im(conj(Sm) * Rp * conj(Sp)), im(conj(Rp) * Sm)};
    Eigen::MatrixXd M(5, 3);
    for (int i = 0; i < 5; ++i) M.row(i) << W[i].x, W[i].y, W[i].z;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    SpanReport rep;
    auto sv = svd.singularValues();
    for (int i = 0; i < 3; ++i) {
        if (sv(i) > tau_svd) ++rep.dim;
        if (sv(i) > 0.1 * tau_svd && sv(i) < 10 * tau_svd) rep.near_threshold = true;
    }
    if (rep.dim >= 3)
        throw std::runtime_error(
            "reconstruct_sixtuple: full-rank span (input defect too large)");
    for (int i = 0; i < rep.dim; ++i) {
        Eigen::Vector3d c = svd.matrixV().col(i);
        rep.basis.push_back({c(0), c(1), c(2)});
    }
    rep.x1_choices = rep.dim == 2   ? X1Choices::PairPlusMinus
                     : rep.dim == 1 ? X1Choices::Circle
                                    : X1Choices::Sphere;

    // x1: normalized commutator direction of the best non-commuting pair,
    // which is automatically orthogonal to the whole span; otherwise any
    // unit vector in the orthogonal complement.
    Vec3 x1v;
    double best = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            Vec3 c = W[i].cross(W[j]);
            double nn = c.norm();
            if (nn > best) {
                best = nn;
                x1v = c * (1.0 / nn);
            }
        }
    if (best <= tau_svd) {
        Eigen::Vector3d c = svd.matrixV().col(2);  // smallest singular direction
        x1v = Vec3{c(0), c(1), c(2)}.normalized();
    }

    Quat x1 = pure(x1v);
    SixTuple s;
    s.x[0] = x1;
    s.x[1] = conj(x1) * Rm;
    s.x[2] = conj(Rm) * x1 * conj(Sm);
    s.x[3] = Sm * conj(x1) * Sp;
    s.x[4] = conj(Sp) * x1 * conj(Sm) * Rp;
    s.x[5] = conj(Rp) * Sm * conj(x1);
    return {rep, s};
}

// U(X1..X4) = Re(X1 X2 X3 X4 i); the obstruction to extending a traceless
// four-tuple to a six-tuple through x5 = i.
inline double u_eval(const std::array<Quat, 4>& X) {
    return re(X[0] * X[1] * X[2] * X[3] * Q_i);
}

inline SixTuple embed_I(const std::array<Quat, 4>& X, double tau_rel = 1e-9) {
    if (std::abs(u_eval(X)) > tau_rel)
        throw std::domain_error("embed_I: obstruction U is nonzero");
    SixTuple s;
    for (int i = 0; i < 4; ++i) s.x[i] = X[i];
    s.x[4] = Q_i;
    s.x[5] = conj(X[0] * X[1] * X[2] * X[3] * Q_i);
    return s;
}

using C4 = std::array<std::complex<double>, 4>;

// H(z) = Re(z^* Q z) with the fixed Hermitian matrix Q (signature zero).
inline double h_form(const C4& z) {
    const std::complex<double> I(0, 1);
    std::complex<double> Q[4][4] = {
        {0, -I * 0.5, I * 0.5, -I * 0.5},
        {I * 0.5, 0, -I * 0.5, I * 0.5},
        {-I * 0.5, I * 0.5, 0, -I * 0.5},
        {I * 0.5, -I * 0.5, I * 0.5, 0}};
    std::complex<double> acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += std::conj(z[i]) * Q[i][j] * z[j];
    return acc.real();
}

// S(z) = Re((i + z1 j)(i + z2 j)(i + z3 j)(i + z4 j) i), the quartic whose
// quadratic part is H.
inline double s_form(const C4& z) {
    auto emb = [](const std::complex<double>& w) { return Quat{0, 1, w.real(), w.imag()}; };
    Quat p = emb(z[0]) * emb(z[1]) * emb(z[2]) * emb(z[3]) * Q_i;
    return re(p);
}

// The same value through the algebraic split S = H + Re(i z1 conj(z2) z3 conj(z4)).
inline double s_form_split(const C4& z) {
    const std::complex<double> I(0, 1);
    return h_form(z) + (I * z[0] * std::conj(z[1]) * z[2] * std::conj(z[3])).real();
}

// Bundle map spot check: M(A,B) = (conj(A) B, conj(A) i B) as a pair of
// vectors in R^4 is an orthonormal pair, i.e. a point of UTS^3.
inline UTPoint m_bundle(const Quat& A, const Quat& B) {
    Quat u = conj(A) * B, v = conj(A) * Q_i * B;
    UTPoint out;
    out.w1 = Eigen::Vector4d(u.a, u.b, u.c, u.d);
    out.w2 = Eigen::Vector4d(v.a, v.b, v.c, v.d);
    return out;
}

}  // namespace genus2
