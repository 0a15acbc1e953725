#pragma once

// Reference Morse-Bott model on CP^3: the height function kappa, its
// extremal loci (the real points and the quadric), and a chart-free
// Riemannian gradient norm.

#include <Eigen/Dense>

#include <complex>

#include "genus2/quat.hpp"

namespace genus2 {

using CP3Point = Eigen::Vector4cd;  // unit vector in C^4 up to global phase

// kappa([z]) = 1 - 2 |z1^2+z2^2+z3^2+z4^2|^2 / (|z1|^2+...+|z4|^2)^2;
// scale- and phase-invariant by construction.
inline double kappa_cp3(const CP3Point& z) {
    std::complex<double> q = z(0) * z(0) + z(1) * z(1) + z(2) * z(2) + z(3) * z(3);
    double n2 = z.squaredNorm();
    return 1.0 - 2.0 * std::norm(q) / (n2 * n2);
}

// Norm of the Riemannian gradient on CP^3: finite differences on S^7 with
// the radial and phase directions projected out (avoids local charts).
inline double grad_norm_cp3(const CP3Point& z, double h = 1e-6) {
    Eigen::Matrix<double, 8, 1> v;
    for (int i = 0; i < 4; ++i) {
        v(2 * i) = z(i).real();
        v(2 * i + 1) = z(i).imag();
    }
    v.normalize();
    auto kap = [](const Eigen::Matrix<double, 8, 1>& w) {
        CP3Point p;
        for (int i = 0; i < 4; ++i) p(i) = {w(2 * i), w(2 * i + 1)};
        return kappa_cp3(p);
    };
    Eigen::Matrix<double, 8, 1> g;
    for (int i = 0; i < 8; ++i) {
        Eigen::Matrix<double, 8, 1> vp = v, vm = v;
        vp(i) += h;
        vm(i) -= h;
        g(i) = (kap(vp) - kap(vm)) / (2 * h);
    }
    Eigen::Matrix<double, 8, 1> phase;  // direction of i * z
    for (int i = 0; i < 4; ++i) {
        phase(2 * i) = -v(2 * i + 1);
        phase(2 * i + 1) = v(2 * i);
    }
    g -= g.dot(v) * v;
    g -= g.dot(phase) * phase;
    return g.norm();
}

inline CP3Point random_cp3(Rng& rng) {
    CP3Point z;
    for (int i = 0; i < 4; ++i) z(i) = {rng.gauss(), rng.gauss()};
    return z / z.norm();
}

// Haar-ish random SO(4): QR of a Gaussian matrix with sign fix.
inline Eigen::Matrix4d random_so4(Rng& rng) {
    Eigen::Matrix4d A;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A(i, j) = rng.gauss();
    Eigen::HouseholderQR<Eigen::Matrix4d> qr(A);
    Eigen::Matrix4d Q = qr.householderQ();
    Eigen::Matrix4d R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 4; ++i)
        if (R(i, i) < 0) Q.col(i) *= -1;
    if (Q.determinant() < 0) Q.col(0) *= -1;
    return Q;
}

inline CP3Point apply_so4(const Eigen::Matrix4d& M, const CP3Point& z) {
    return M.cast<std::complex<double>>() * z;
}

// Point on the real locus (minimum) / on the quadric (maximum).
inline CP3Point random_real_point(Rng& rng) {
    CP3Point z;
    for (int i = 0; i < 4; ++i) z(i) = rng.gauss();
    return z / z.norm();
}

inline CP3Point random_quadric_point(Rng& rng) {
    // x + i y with |x| = |y|, x.y = 0 satisfies sum z_i^2 = 0
    Eigen::Vector4d x, y;
    for (int i = 0; i < 4; ++i) x(i) = rng.gauss();
    for (int i = 0; i < 4; ++i) y(i) = rng.gauss();
    x.normalize();
    y -= y.dot(x) * x;
    y.normalize();
    CP3Point z;
    for (int i = 0; i < 4; ++i) z(i) = {x(i), y(i)};
    return z / z.norm();
}

}  // namespace genus2
