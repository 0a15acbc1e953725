#pragma once

// Representation tuples for the genus-two surface group and punctured
// spheres: the relator check, the separating-curve character kappa, orbit
// types, a closed-form conjugacy test, and seeded samplers.

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genus2/quat.hpp"

namespace genus2 {

// Images of the standard generators r-, s-, r+, s+ of
// < r-, s-, r+, s+ | [r-,s-][r+,s+] = 1 >.
struct SurfaceRep {
    Quat Rm, Sm, Rp, Sp;
};

// Traceless meridian images for the 6-punctured sphere, product x1..x6 = 1.
struct SixTuple {
    std::array<Quat, 6> x;
};

// Traceless meridian images a,b,c,d for the 4-punctured sphere, with ba = cd.
struct FourTuple {
    Quat a, b, c, d;
};

enum class OrbitType { NonAbelian, AbelianNonCentral, Central };

inline double relator_defect(const SurfaceRep& r) {
    return dist(commutator(r.Rm, r.Sm) * commutator(r.Rp, r.Sp), Q_one);
}

inline double sixtuple_defect(const SixTuple& s) {
    double worst = dist(s.x[0] * s.x[1] * s.x[2] * s.x[3] * s.x[4] * s.x[5], Q_one);
    for (const Quat& q : s.x) worst = std::max(worst, std::abs(re(q)));
    return worst;
}

inline double fourtuple_defect(const FourTuple& f) {
    double worst = dist(f.b * f.a, f.c * f.d);
    for (const Quat* q : {&f.a, &f.b, &f.c, &f.d}) worst = std::max(worst, std::abs(re(*q)));
    return worst;
}

inline double kappa(const SurfaceRep& r, double tau_rel = 1e-9) {
    if (relator_defect(r) > tau_rel)
        throw std::domain_error("kappa: relator defect exceeds tolerance");
    return re(commutator(r.Rm, r.Sm));
}

inline OrbitType orbit_type(const std::vector<Quat>& images, double tau_ab = 1e-8) {
    if (images.empty()) throw std::domain_error("orbit_type: empty image list");
    bool central = true;
    for (const Quat& q : images)
        if (im(q).norm() > tau_ab || std::abs(std::abs(re(q)) - 1.0) > tau_ab) central = false;
    if (central) return OrbitType::Central;
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            if (im(images[i]).cross(im(images[j])).norm() > tau_ab) return OrbitType::NonAbelian;
    return OrbitType::AbelianNonCentral;
}

struct ConjResult {
    bool equivalent = false;
    Quat g = Q_one;    // witness: g w1 g^-1 ~ w2
    double residual = 0;
};

inline Quat rotate(const Quat& g, const Quat& w) { return g * w * conj(g); }

// Conjugacy test on equal-length word lists.  Conjugation preserves real
// parts and acts on the imaginary vectors by a rotation, so the optimal
// aligning rotation comes from the classical closed-form absolute-orientation
// solution: the top eigenvector of a 4x4 symmetric matrix built from the
// correlation of the two vector clouds.
inline ConjResult conj_equivalent(const std::vector<Quat>& w1, const std::vector<Quat>& w2,
                                  double tau = 1e-8) {
    if (w1.size() != w2.size()) throw std::domain_error("conj_equivalent: length mismatch");
    ConjResult out;
    double total_im = 0;
    for (size_t i = 0; i < w1.size(); ++i) {
        if (std::abs(re(w1[i]) - re(w2[i])) > tau) return out;  // Re is invariant
        total_im += im(w1[i]).norm() + im(w2[i]).norm();
    }
    if (total_im < 1e-12) {  // central tuples: alignment is degenerate, compare directly
        double r = 0;
        for (size_t i = 0; i < w1.size(); ++i) r = std::max(r, dist(w1[i], w2[i]));
        out.residual = r;
        out.equivalent = r <= tau;
        return out;
    }

    Eigen::Matrix3d S = Eigen::Matrix3d::Zero();
    for (size_t i = 0; i < w1.size(); ++i) {
        Vec3 u = im(w1[i]), v = im(w2[i]);
        Eigen::Vector3d a(u.x, u.y, u.z), b(v.x, v.y, v.z);
        S += a * b.transpose();
    }
    Eigen::Matrix4d N;
    N << S(0, 0) + S(1, 1) + S(2, 2), S(1, 2) - S(2, 1), S(2, 0) - S(0, 2), S(0, 1) - S(1, 0),
         S(1, 2) - S(2, 1), S(0, 0) - S(1, 1) - S(2, 2), S(0, 1) + S(1, 0), S(2, 0) + S(0, 2),
         S(2, 0) - S(0, 2), S(0, 1) + S(1, 0), -S(0, 0) + S(1, 1) - S(2, 2), S(1, 2) + S(2, 1),
         S(0, 1) - S(1, 0), S(2, 0) + S(0, 2), S(1, 2) + S(2, 1), -S(0, 0) - S(1, 1) + S(2, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(N);
    Eigen::Vector4d q = es.eigenvectors().col(3);  // largest eigenvalue
    out.g = Quat{q(0), q(1), q(2), q(3)}.normalized();

    double r = 0;
    for (size_t i = 0; i < w1.size(); ++i) r = std::max(r, dist(rotate(out.g, w1[i]), w2[i]));
    out.residual = r;
    out.equivalent = r <= tau;
    return out;
}

// The ten fingerprint words.  Odd-length words are included because products
// of evenly many generators cannot see the global sign twist nu.
inline std::array<Quat, 10> rep_words(const SurfaceRep& r) {
    return {r.Rm,        r.Sm,        r.Rm * r.Sm,        r.Rp,
            r.Sp,        r.Rp * r.Sp, r.Rm * r.Rp,        r.Sm * r.Sp,
            r.Rm * r.Sm * r.Rp,       r.Rm * r.Sm * r.Rp * r.Sp};
}

inline std::array<double, 10> fingerprint(const SurfaceRep& r) {
    auto w = rep_words(r);
    std::array<double, 10> out{};
    for (int i = 0; i < 10; ++i) out[i] = re(w[i]);
    return out;
}

inline std::vector<Quat> rep_word_list(const SurfaceRep& r) {
    auto w = rep_words(r);
    return std::vector<Quat>(w.begin(), w.end());
}

inline ConjResult conj_equivalent(const SurfaceRep& r1, const SurfaceRep& r2, double tau = 1e-8) {
    return conj_equivalent(rep_word_list(r1), rep_word_list(r2), tau);
}

inline SurfaceRep conjugate_rep(const Quat& g, const SurfaceRep& r) {
    return {rotate(g, r.Rm), rotate(g, r.Sm), rotate(g, r.Rp), rotate(g, r.Sp)};
}

// Solve [R, S] = c for S, given that the solvability condition
// Re(conj(R) c) = Re(R) holds; the solutions form a circle
// S = S0 e^{t Axis(R)}.  Returns the solution at angle t.
inline std::optional<Quat> solve_commutator_partner(const Quat& R, const Quat& c, double t,
                                                    double tol = 1e-9) {
    Quat m = conj(R) * c;  // must be a conjugate of conj(R): S conj(R) conj(S) = m
    if (std::abs(re(m) - re(R)) > tol) return std::nullopt;
    Vec3 u = im(conj(R)), v = im(m);
    double nu = u.norm(), nv = v.norm();
    if (nu < tol) return std::nullopt;  // R central: only c = 1 is solvable
    Vec3 uh = u * (1.0 / nu), vh = v * (1.0 / nv);
    // rotation taking uh to vh
    Quat S0;
    double dd = uh.dot(vh);
    if (dd > 1.0 - 1e-14) {
        S0 = Q_one;
    } else if (dd < -1.0 + 1e-14) {
        Vec3 axis = uh.cross(std::abs(uh.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0}).normalized();
        S0 = exp_im(axis, 1.5707963267948966);
    } else {
        Vec3 axis = uh.cross(vh).normalized();
        S0 = exp_im(axis, 0.5 * std::acos(dd));
    }
    Quat S = S0 * exp_im(uh, t);
    return S.normalized();
}

// Complete a (-) side with non-central commutator to a full representation:
// R+ drawn Haar on the 2-sphere { R : <R, c - 1> = 0 } (the locus where the
// commutator equation for S+ is solvable), then S+ uniform on the solution
// circle.  Returns nullopt if the (-) side is too close to abelian.
inline std::optional<SurfaceRep> complete_plus_side(const Quat& Rm, const Quat& Sm, Rng& rng) {
    Quat c = conj(commutator(Rm, Sm));  // need [R+, S+] = c
    Quat h = c - Q_one;
    if (h.norm() < 1e-6) return std::nullopt;  // nearly abelian (-) side
    for (int attempt = 0; attempt < 64; ++attempt) {
        // orthonormal basis of the hyperplane h-perp in R^4
        Eigen::Vector4d hv(h.a, h.b, h.c, h.d);
        hv.normalize();
        Eigen::Matrix4d M = Eigen::Matrix4d::Identity() - hv * hv.transpose();
        Eigen::JacobiSVD<Eigen::Matrix4d> svd(M, Eigen::ComputeFullU);
        Eigen::Vector4d g3(rng.gauss(), rng.gauss(), rng.gauss(), 0.0);
        Eigen::Vector4d Rv = svd.matrixU().leftCols(3) * g3.head(3);
        if (Rv.norm() < 1e-9) continue;
        Rv.normalize();
        Quat Rp{Rv(0), Rv(1), Rv(2), Rv(3)};
        auto Sp = solve_commutator_partner(Rp, c, rng.uniform(0, 6.283185307179586), 1e-7);
        if (!Sp) continue;
        SurfaceRep rep{Rm, Sm, Rp, *Sp};
        if (relator_defect(rep) > 1e-10) continue;
        return rep;
    }
    return std::nullopt;
}

// Random representation with nonabelian image: (R-, S-) Haar, (+) side by
// the circle-of-solutions completion.
inline SurfaceRep random_nonabelian_rep(Rng& rng, double tau_ab = 1e-8) {
    for (;;) {
        Quat Rm = rng.random_unit(), Sm = rng.random_unit();
        auto rep = complete_plus_side(Rm, Sm, rng);
        if (!rep) continue;
        if (orbit_type({rep->Rm, rep->Sm, rep->Rp, rep->Sp}, tau_ab) != OrbitType::NonAbelian)
            continue;
        return *rep;
    }
}

}  // namespace genus2
