#pragma once

// Quaternion and su(2) arithmetic for the character-variety code.
//
// Conventions: q = a + b i + c j + d k with the Hamilton relations
// i j = k, j k = i, k i = j.  SU(2) is the unit sphere in H, su(2) is the
// imaginary part, and conjugation by a unit quaternion acts on su(2) ~ R^3
// as an SO(3) rotation.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace genus2 {

struct Vec3 {
    double x{0}, y{0}, z{0};

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        return {x / n, y / n, z / n};
    }
};

struct Quat {
    double a{1}, b{0}, c{0}, d{0};  // a + b i + c j + d k

    constexpr Quat() = default;
    constexpr Quat(double a_, double b_, double c_, double d_) : a{a_}, b{b_}, c{c_}, d{d_} {}
    Quat(double re, const Vec3& v) : a{re}, b{v.x}, c{v.y}, d{v.z} {}

    Quat operator+(const Quat& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Quat operator-(const Quat& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Quat operator-() const { return {-a, -b, -c, -d}; }
    Quat operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    // Hamilton product
    Quat operator*(const Quat& o) const {
        return {a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }

    double norm2() const { return a * a + b * b + c * c + d * d; }
    double norm() const { return std::sqrt(norm2()); }
    Quat normalized() const {
        double n = norm();
        return {a / n, b / n, c / n, d / n};
    }
};

inline constexpr Quat Q_one{1, 0, 0, 0};
inline constexpr Quat Q_i{0, 1, 0, 0};
inline constexpr Quat Q_j{0, 0, 1, 0};
inline constexpr Quat Q_k{0, 0, 0, 1};

inline double re(const Quat& q) { return q.a; }
inline Vec3 im(const Quat& q) { return {q.b, q.c, q.d}; }
inline Quat conj(const Quat& q) { return {q.a, -q.b, -q.c, -q.d}; }
inline double dist(const Quat& p, const Quat& q) { return (p - q).norm(); }

// <A,B> = Re(conj(A) B), the Euclidean inner product on H
inline double inner(const Quat& A, const Quat& B) {
    return A.a * B.a + A.b * B.b + A.c * B.c + A.d * B.d;
}

constexpr double tau_unit_default = 1e-12;

// e^{theta P} = cos(theta) + sin(theta) P for a unit imaginary P
inline Quat exp_im(const Vec3& P, double theta) {
    double n = P.norm();
    if (std::abs(n - 1.0) > 1e-9) throw std::domain_error("exp_im: axis is not a unit vector");
    double s = std::sin(theta);
    return {std::cos(theta), s * P.x, s * P.y, s * P.z};
}

inline Quat commutator(const Quat& x, const Quat& y) {
    return x * y * conj(x) * conj(y);  // valid for unit quaternions (inverse = conjugate)
}

inline Quat pure(const Vec3& v) { return {0, v.x, v.y, v.z}; }

// Seeded RNG.  Gaussians come from a hand-rolled Box-Muller over 53-bit
// uniforms so that output streams are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gauss() {
        double u1 = uniform01(), u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    Quat random_unit() {
        Quat q{gauss(), gauss(), gauss(), gauss()};
        double n = q.norm();
        while (n < 1e-6) {  // astronomically unlikely; keeps the map well-defined
            q = {gauss(), gauss(), gauss(), gauss()};
            n = q.norm();
        }
        return q * (1.0 / n);
    }

    Vec3 random_s2() {
        Vec3 v{gauss(), gauss(), gauss()};
        double n = v.norm();
        while (n < 1e-6) {
            v = {gauss(), gauss(), gauss()};
            n = v.norm();
        }
        return v * (1.0 / n);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace genus2
