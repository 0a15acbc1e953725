#pragma once

// Trace coordinates on the rank-2 free-group character variety, the cubic
// Morse function k on the pillow ball B, its gradient flow, and the level-0
// trivialization coordinates.

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "genus2/quat.hpp"
#include "genus2/repvar.hpp"

namespace genus2 {

struct PillowPoint {
    double x{0}, y{0}, z{0};
};

inline PillowPoint goldman_w(const Quat& a, const Quat& b) {
    return {re(a), re(b), re(a * conj(b))};
}

inline double k_eval(const PillowPoint& p) {
    return 2.0 * (p.x * p.x + p.y * p.y + p.z * p.z - 2.0 * p.x * p.y * p.z) - 1.0;
}

inline Vec3 k_grad(const PillowPoint& p) {
    return {4.0 * (p.x - p.y * p.z), 4.0 * (p.y - p.x * p.z), 4.0 * (p.z - p.x * p.y)};
}

inline Eigen::Matrix3d k_hess(const PillowPoint& p) {
    Eigen::Matrix3d H;
    H << 1, -p.z, -p.y, -p.z, 1, -p.x, -p.y, -p.x, 1;
    return 4.0 * H;
}

inline bool in_B(const PillowPoint& p, double tau_B = 1e-10) {
    double c = p.x * p.x + p.y * p.y + p.z * p.z - 2.0 * p.x * p.y * p.z;
    return c <= 1.0 + tau_B && std::abs(p.x) <= 1.0 + tau_B && std::abs(p.y) <= 1.0 + tau_B &&
           std::abs(p.z) <= 1.0 + tau_B;
}

inline double kappa_from_w(const Quat& a, const Quat& b) { return k_eval(goldman_w(a, b)); }

inline const std::array<PillowPoint, 4>& pillow_corners() {
    static const std::array<PillowPoint, 4> c = {
        PillowPoint{1, 1, 1}, PillowPoint{-1, 1, -1}, PillowPoint{1, -1, -1},
        PillowPoint{-1, -1, 1}};
    return c;
}

inline double corner_distance(const PillowPoint& p) {
    double best = 1e300;
    for (const auto& c : pillow_corners()) {
        double dx = p.x - c.x, dy = p.y - c.y, dz = p.z - c.z;
        best = std::min(best, std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    return best;
}

// Newton on grad k = 0 seeded from a grid_n^3 grid over [-1,1]^3,
// deduplicated.  The census is {origin} + the four corners.
inline std::vector<PillowPoint> find_critical_points(int grid_n, double newton_tol = 1e-12) {
    if (grid_n < 8) throw std::domain_error("find_critical_points: grid_n must be >= 8");
    std::vector<PillowPoint> found;
    for (int ix = 0; ix < grid_n; ++ix)
        for (int iy = 0; iy < grid_n; ++iy)
            for (int iz = 0; iz < grid_n; ++iz) {
                auto coord = [grid_n](int i) { return -1.0 + 2.0 * i / (grid_n - 1.0); };
                Eigen::Vector3d p(coord(ix), coord(iy), coord(iz));
                bool ok = false;
                for (int it = 0; it < 60; ++it) {
                    PillowPoint q{p(0), p(1), p(2)};
                    Vec3 g = k_grad(q);
                    Eigen::Vector3d gv(g.x, g.y, g.z);
                    if (gv.norm() < newton_tol) {
                        ok = true;
                        break;
                    }
                    Eigen::Matrix3d H = k_hess(q);
                    Eigen::FullPivLU<Eigen::Matrix3d> lu(H);
                    if (!lu.isInvertible()) break;  // degenerate seed, skip
                    p -= lu.solve(gv);
                    if (p.norm() > 10) break;  // diverged, skip
                }
                if (!ok) continue;
                PillowPoint q{p(0), p(1), p(2)};
                if (!in_B(q, 1e-6)) continue;
                bool dup = false;
                for (const auto& f : found) {
                    double dx = f.x - q.x, dy = f.y - q.y, dz = f.z - q.z;
                    if (std::sqrt(dx * dx + dy * dy + dz * dz) < 1e-6) dup = true;
                }
                if (!dup) found.push_back(q);
            }
    std::sort(found.begin(), found.end(), [](const PillowPoint& a, const PillowPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });
    return found;
}

// Point on the level set k = c along the ray through omega (unit vector).
// k is monotone along rays from the origin inside B, and k >= 1 on every
// face of the cube, so the bracket [0, r_box] always contains the root.
inline PillowPoint level_point(const Vec3& omega, double c) {
    if (c < -1.0 || c > 1.0) throw std::domain_error("level_point: level outside [-1,1]");
    double m = std::max({std::abs(omega.x), std::abs(omega.y), std::abs(omega.z)});
    if (m < 1e-15) throw std::domain_error("level_point: zero direction");
    double lo = 0.0, hi = 1.0 / m;
    auto kk = [&](double r) { return k_eval({r * omega.x, r * omega.y, r * omega.z}); };
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (kk(mid) < c ? lo : hi) = mid;
    }
    double r = 0.5 * (lo + hi);
    return {r * omega.x, r * omega.y, r * omega.z};
}

enum class TerminalFlag { Interior, Boundary, Corner };

struct FlowLine {
    std::vector<std::pair<double, PillowPoint>> samples;  // (t, p) with k(p) = t
    TerminalFlag terminal_flag = TerminalFlag::Interior;
};

struct StepCtrl {
    double dt = 1e-3;          // level step
    double r_corner = 1e-3;    // corner capture radius
    double tau_flow = 1e-6;    // level-tracking tolerance
    long max_steps = 1000000;
    long sample_every = 10;    // record every N-th step
};

namespace detail {
// One RK4 step of dp/ds = grad k / |grad k|^2 over the signed level
// increment ds, followed by Newton projection back onto the level k = s.
// Returns false if the field is singular away from the corners.
inline bool flow_step(PillowPoint& p, double s_next, double ds) {
    auto field = [](const PillowPoint& q) -> Vec3 {
        Vec3 g = k_grad(q);
        double n2 = g.dot(g);
        return g * (1.0 / n2);
    };
    auto at = [](const PillowPoint& q, const Vec3& v, double h) -> PillowPoint {
        return {q.x + h * v.x, q.y + h * v.y, q.z + h * v.z};
    };
    if (k_grad(p).norm() < 1e-8) return false;
    Vec3 k1 = field(p);
    Vec3 k2 = field(at(p, k1, 0.5 * ds));
    Vec3 k3 = field(at(p, k2, 0.5 * ds));
    Vec3 k4 = field(at(p, k3, ds));
    Vec3 inc = (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (ds / 6.0);
    p = {p.x + inc.x, p.y + inc.y, p.z + inc.z};
    for (int it = 0; it < 4; ++it) {  // project onto k = s_next
        double r = k_eval(p) - s_next;
        if (std::abs(r) < 1e-14) break;
        Vec3 g = k_grad(p);
        double n2 = g.dot(g);
        if (n2 < 1e-16) return false;
        p = {p.x - r * g.x / n2, p.y - r * g.y / n2, p.z - r * g.z / n2};
    }
    return true;
}
}  // namespace detail

// Integrate the normalized gradient field X = grad k / |grad k|^2 from a
// point of k^{-1}(s0) up (or down) to the level t_end; k equals the curve
// parameter at every sample.
inline FlowLine flow_alpha(const PillowPoint& p0, double t_end, const StepCtrl& ctrl = {}) {
    double s0 = k_eval(p0);
    FlowLine out;
    out.samples.push_back({s0, p0});
    PillowPoint p = p0;
    double sign = (t_end >= s0) ? 1.0 : -1.0;
    double s = s0;
    long steps = 0, since_sample = 0;
    while (sign * (t_end - s) > 0 && steps < ctrl.max_steps) {
        double ds = std::min(ctrl.dt, std::abs(t_end - s));
        // near-corner stiffness: the field blows up where grad k vanishes
        while (k_grad(p).norm() < 0.05 && ds > 1e-9) ds *= 0.5;
        if (corner_distance(p) < ctrl.r_corner) {
            out.terminal_flag = TerminalFlag::Corner;
            return out;
        }
        double s_next = s + sign * ds;
        if (!detail::flow_step(p, s_next, sign * ds)) {
            if (corner_distance(p) < 10 * ctrl.r_corner) {
                out.terminal_flag = TerminalFlag::Corner;
                return out;
            }
            throw std::runtime_error("flow_alpha: singular field away from corners");
        }
        s = s_next;
        ++steps;
        if (++since_sample >= ctrl.sample_every || sign * (t_end - s) <= 0) {
            out.samples.push_back({s, p});
            since_sample = 0;
        }
    }
    if (corner_distance(p) < ctrl.r_corner) {
        out.terminal_flag = TerminalFlag::Corner;
    } else if (std::abs(t_end - 1.0) < 1e-12 && std::abs(k_eval(p) - 1.0) < ctrl.tau_flow &&
               k_grad(p).norm() > 1e-8) {
        // the boundary of B is the level set k = 1 inside the cube; a
        // nonvanishing gradient there is exactly transversality
        out.terminal_flag = TerminalFlag::Boundary;
    } else {
        out.terminal_flag = TerminalFlag::Interior;
    }
    return out;
}

// Trivialization coordinates: restrict to the two one-holed tori, take trace
// coordinates, flow to the level k = 0, and report the landing points in the
// radial chart of k^{-1}(0) (the zero level is star-shaped about the origin,
// so the unit direction is a global chart).
struct LambdaCoords {
    Vec3 sigma_minus, sigma_plus;  // unit radial directions of the landing points
    double t;                      // = kappa
};

inline LambdaCoords lambda_coords(const SurfaceRep& rho, double delta = 1e-3,
                                  const StepCtrl& ctrl = {}) {
    double t = kappa(rho);
    if (t < -1.0 + delta || t > 1.0 - delta)
        throw std::domain_error("lambda_coords: kappa too close to +-1");
    auto land = [&](const Quat& a, const Quat& b) -> Vec3 {
        PillowPoint w = goldman_w(a, b);
        FlowLine f = flow_alpha(w, 0.0, ctrl);
        const PillowPoint& q = f.samples.back().second;
        return Vec3{q.x, q.y, q.z}.normalized();
    };
    return {land(rho.Rm, rho.Sm), land(rho.Rp, rho.Sp), t};
}

}  // namespace genus2
