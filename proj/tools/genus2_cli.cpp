// Command-line front end: verification suites, flow/fiber/intersection
// exporters, and locus samplers.  All output is deterministic for a fixed
// seed: reports carry no timing data, CSV numbers are fixed 17-digit, and
// JSON keys keep insertion order.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "genus2/config.hpp"
#include "genus2/cp3.hpp"
#include "genus2/io.hpp"
#include "genus2/lagr.hpp"
#include "genus2/suites.hpp"

using namespace genus2;

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> tol_kv;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false, out_set = false, json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) {
        o.seed_set = true;
    });
    cmd->add_option("--config", o.config_path, "key=value config file");
    cmd->add_option("--out", o.out_dir, "output directory")->each([&](const std::string&) {
        o.out_set = true;
    });
    cmd->add_option("--tol", o.tol_kv, "tolerance override KEY=VAL (repeatable)");
    cmd->add_flag("--json", o.json, "emit a JSON report on stdout");
}

// Config resolution order: defaults < config file (flag or environment
// variable GENUS2_CONFIG) < command-line flags.
Config resolve(const CommonOpts& o) {
    Config cfg;
    std::string path = o.config_path;
    if (path.empty())
        if (const char* env = std::getenv("GENUS2_CONFIG")) path = env;
    if (!path.empty()) cfg.load_file(path);
    for (const std::string& kv : o.tol_kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--tol expects KEY=VAL, got: " + kv);
        cfg.set_kv(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (o.seed_set) cfg.seed = o.seed;
    if (o.out_set) cfg.output_dir = o.out_dir;
    return cfg;
}

std::string out_path(const Config& cfg, const std::string& name) {
    return cfg.output_dir + "/" + name;
}

const std::vector<std::string> kSuites = {"quat", "repvar", "pillow", "cover", "lagr", "cp3"};

int cmd_verify(const std::string& suite, const CommonOpts& o) {
    Config cfg = resolve(o);
    std::vector<std::string> names;
    if (suite == "all")
        names = kSuites;
    else
        names.push_back(suite);

    bool all_pass = true;
    ordered_json report;
    report["command"] = "verify";
    report["seed"] = cfg.seed;
    report["suites"] = ordered_json::array();
    for (const std::string& name : names) {
        auto checks = run_suite(name, cfg);  // throws domain_error on unknown suite
        ordered_json js;
        js["name"] = name;
        js["checks"] = ordered_json::array();
        if (!o.json) std::printf("suite %s\n", name.c_str());
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            if (o.json) {
                ordered_json jc;
                jc["name"] = c.name;
                jc["samples"] = c.samples;
                jc["max_defect"] = fmt17(c.max_defect);
                jc["pass"] = c.pass;
                js["checks"].push_back(jc);
            } else {
                std::printf("  %-38s n=%-8ld max_defect=%-12s %s\n", c.name.c_str(),
                            c.samples, fmt17(c.max_defect).c_str(), c.pass ? "PASS" : "FAIL");
            }
        }
        report["suites"].push_back(js);
    }
    report["all_pass"] = all_pass;
    if (o.json)
        std::printf("%s\n", report.dump(2).c_str());
    else
        std::printf("%s\n", all_pass ? "all checks passed" : "CHECK FAILURES PRESENT");
    return all_pass ? 0 : 1;
}

int cmd_critical_points(int grid, const CommonOpts& o) {
    Config cfg = resolve(o);
    (void)cfg;
    auto pts = find_critical_points(grid);
    ordered_json report;
    report["command"] = "critical-points";
    report["grid"] = grid;
    report["count"] = pts.size();
    report["points"] = ordered_json::array();
    for (const auto& p : pts) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(k_hess(p));
        int index = 0;
        for (int i = 0; i < 3; ++i) index += es.eigenvalues()(i) < 0;
        ordered_json jp;
        jp["x"] = fmt17(p.x);
        jp["y"] = fmt17(p.y);
        jp["z"] = fmt17(p.z);
        jp["k"] = fmt17(k_eval(p));
        jp["grad_norm"] = fmt17(k_grad(p).norm());
        jp["morse_index"] = index;
        report["points"].push_back(jp);
        if (!o.json)
            std::printf("(% .12f, % .12f, % .12f)  k=%s  |grad|=%s  index=%d\n", p.x, p.y,
                        p.z, fmt17(k_eval(p)).c_str(), fmt17(k_grad(p).norm()).c_str(), index);
    }
    if (o.json)
        std::printf("%s\n", report.dump(2).c_str());
    else
        std::printf("%zu critical points on grid %d\n", pts.size(), grid);
    return 0;
}

int cmd_flow(int n_lines, const CommonOpts& o) {
    if (n_lines < 1) throw CLI::ValidationError("--lines must be >= 1");
    Config cfg = resolve(o);
    Rng rng(cfg.seed);
    CsvWriter summary(out_path(cfg, "flow_summary.csv"),
                      {"line", "seed_type", "terminal_flag", "samples", "worst_level_defect"});
    int corner_hits = 0, boundary_exits = 0;
    for (int i = 0; i < n_lines; ++i) {
        Vec3 dir;
        std::string seed_type;
        if (i < 4) {  // the four corner rays lie on gradient flow lines
            const auto& c = pillow_corners()[i];
            dir = Vec3{c.x, c.y, c.z}.normalized();
            seed_type = "corner-ray";
        } else {
            dir = rng.random_s2();
            seed_type = "generic";
        }
        PillowPoint p0 = level_point(dir, 0.0);
        FlowLine f = flow_alpha(p0, 1.0);
        const char* flag = f.terminal_flag == TerminalFlag::Corner     ? "corner"
                           : f.terminal_flag == TerminalFlag::Boundary ? "boundary"
                                                                       : "interior";
        if (f.terminal_flag == TerminalFlag::Corner) ++corner_hits;
        if (f.terminal_flag == TerminalFlag::Boundary) ++boundary_exits;
        char name[64];
        std::snprintf(name, sizeof(name), "flow_line_%03d.csv", i);
        CsvWriter line(out_path(cfg, name), {"t", "x", "y", "z"});
        double worst = 0;
        for (const auto& [t, p] : f.samples) {
            line.write_row({t, p.x, p.y, p.z});
            worst = std::max(worst, std::abs(k_eval(p) - t));
        }
        summary.write_row_strings({std::to_string(i), seed_type, flag,
                                   std::to_string(f.samples.size()), fmt17(worst)});
    }
    if (o.json) {
        ordered_json report;
        report["command"] = "flow";
        report["lines"] = n_lines;
        report["corner_hits"] = corner_hits;
        report["boundary_exits"] = boundary_exits;
        std::printf("%s\n", report.dump(2).c_str());
    } else {
        std::printf("%d flow lines written to %s (%d corner, %d boundary)\n", n_lines,
                    cfg.output_dir.c_str(), corner_hits, boundary_exits);
    }
    return 0;
}

int cmd_fiber(std::vector<double> v6, const CommonOpts& o) {
    Config cfg = resolve(o);
    (void)cfg;
    Eigen::VectorXd v(6);
    for (int i = 0; i < 6; ++i) v(i) = v6[i];
    ordered_json report;
    report["command"] = "fiber";
    if (std::abs(v.norm() - 1.0) > 1e-6) {
        std::fprintf(stderr, "warning: |v| = %s, renormalizing\n", fmt17(v.norm()).c_str());
        report["renormalized"] = true;
    } else {
        report["renormalized"] = false;
    }
    v.normalize();
    auto sols = ut_fiber(v);
    auto [s1, s2] = lemma_bound_slack(v);
    report["fiber_size"] = sols.size();
    report["lemma_slack"] = ordered_json::array({fmt17(s1), fmt17(s2)});
    report["solutions"] = ordered_json::array();
    for (const auto& s : sols) {
        ordered_json js;
        js["w1"] = ordered_json::array();
        js["w2"] = ordered_json::array();
        for (int i = 0; i < 4; ++i) js["w1"].push_back(fmt17(s.w1(i)));
        for (int i = 0; i < 4; ++i) js["w2"].push_back(fmt17(s.w2(i)));
        js["reprojection_defect"] = fmt17((ut_project(s) - v).norm());
        // index of the tau-partner within the fiber
        UTPoint t = tau(s);
        int partner = -1;
        for (size_t u = 0; u < sols.size(); ++u)
            if ((t.w1 - sols[u].w1).norm() + (t.w2 - sols[u].w2).norm() < 1e-8)
                partner = static_cast<int>(u);
        js["tau_partner"] = partner;
        report["solutions"].push_back(js);
    }
    std::printf("%s\n", report.dump(2).c_str());
    return 0;
}

int cmd_intersect(double eps, int grid, const CommonOpts& o) {
    Config cfg = resolve(o);
    IntersectionReport r =
        intersect_heegaard(eps, grid, grid, grid, cfg.get_tol("newton_tol"));
    CsvWriter csv(out_path(cfg, "intersection.csv"),
                  {"t", "alpha", "beta", "residual", "margin", "component_id",
                   "component_type"});
    ordered_json report;
    report["command"] = "intersect";
    report["eps"] = fmt17(eps);
    report["grid"] = grid;
    report["isolated_points"] = ordered_json::array();
    report["circle_components"] = ordered_json::array();
    int comp_id = 0;
    for (const auto& p : r.isolated_points) {
        csv.write_row({p.t, p.alpha, p.beta, p.residual, p.margin},
                      std::to_string(comp_id) + ",point");
        ordered_json jp;
        jp["t"] = fmt17(p.t);
        jp["alpha"] = fmt17(p.alpha);
        jp["beta"] = fmt17(p.beta);
        jp["t2"] = fmt17(p.t2);
        jp["alpha2"] = fmt17(p.alpha2);
        jp["beta2"] = fmt17(p.beta2);
        jp["residual"] = fmt17(p.residual);
        jp["margin"] = fmt17(p.margin);
        report["isolated_points"].push_back(jp);
        ++comp_id;
    }
    for (const auto& c : r.circle_components) {
        for (const auto& p : c.samples)
            csv.write_row({p.t, p.alpha, p.beta, p.residual, p.margin},
                          std::to_string(comp_id) + ",circle");
        ordered_json jc;
        jc["samples"] = c.samples.size();
        jc["first_t"] = fmt17(c.samples.front().t);
        jc["first_alpha"] = fmt17(c.samples.front().alpha);
        jc["first_beta"] = fmt17(c.samples.front().beta);
        report["circle_components"].push_back(jc);
        ++comp_id;
    }
    report["seeds_converged"] = r.seeds_converged;
    report["cluster_ambiguity"] = r.cluster_ambiguity;
    if (o.json) {
        std::printf("%s\n", report.dump(2).c_str());
    } else {
        std::printf("eps=%s grid=%d: %zu isolated points, %zu circle components\n",
                    fmt17(eps).c_str(), grid, r.isolated_points.size(),
                    r.circle_components.size());
        for (const auto& p : r.isolated_points)
            std::printf("  point t=%s alpha=%s beta=%s margin=%s\n", fmt17(p.t).c_str(),
                        fmt17(p.alpha).c_str(), fmt17(p.beta).c_str(),
                        fmt17(p.margin).c_str());
    }
    return 0;
}

void write_rep_row(CsvWriter& csv, const SurfaceRep& r) {
    auto f = fingerprint(r);
    std::vector<double> row = {r.Rm.a, r.Rm.b, r.Rm.c, r.Rm.d, r.Sm.a, r.Sm.b,
                               r.Sm.c, r.Sm.d, r.Rp.a, r.Rp.b, r.Rp.c, r.Rp.d,
                               r.Sp.a, r.Sp.b, r.Sp.c, r.Sp.d};
    row.insert(row.end(), f.begin(), f.end());
    row.push_back(kappa(r));
    csv.write_row(row);
}

std::vector<std::string> rep_header() {
    std::vector<std::string> h;
    for (const char* g : {"Rm", "Sm", "Rp", "Sp"})
        for (const char* c : {"a", "b", "c", "d"}) h.push_back(std::string(g) + "_" + c);
    for (int i = 0; i < 10; ++i) h.push_back("fp" + std::to_string(i));
    h.push_back("kappa");
    return h;
}

// Representation with kappa(rho) = k0: pick a direction on the level set of
// the pillow ball, reconstruct a (-) pair with those trace coordinates, and
// complete the (+) side on the circle of commutator solutions.
SurfaceRep sample_level_kappa(double k0, Rng& rng) {
    if (k0 > 1.0 - 1e-9) {
        return psi_param(rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI),
                         rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI),
                         rng.uniform(0, PI));
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        PillowPoint w = level_point(rng.random_s2(), k0);
        double sx = std::sqrt(std::max(0.0, 1.0 - w.x * w.x));
        if (sx < 1e-8) continue;
        Quat a{w.x, sx, 0, 0};
        double u = (w.z - w.x * w.y) / sx;
        double v2 = 1.0 - w.y * w.y - u * u;
        if (v2 < 0) continue;  // does not happen inside the ball; guard roundoff
        Quat b{w.y, u, std::sqrt(v2), 0};
        auto rep = complete_plus_side(a, b, rng);
        if (!rep) continue;
        return conjugate_rep(rng.random_unit(), *rep);
    }
    throw std::runtime_error("sample_level_kappa: no sample found (level too degenerate)");
}

int cmd_sample(const std::string& target, double level, int count, const CommonOpts& o) {
    if (count < 1) throw CLI::ValidationError("--count must be >= 1");
    Config cfg = resolve(o);
    Rng rng(cfg.seed);
    if (target == "cp3-level") {
        if (level < -1.0 || level > 1.0)
            throw std::domain_error("cp3-level: level outside [-1, 1]");
        CsvWriter csv(out_path(cfg, "sample_cp3_level.csv"),
                      {"re0", "im0", "re1", "im1", "re2", "im2", "re3", "im3", "kappa"});
        for (int n = 0; n < count; ++n) {
            CP3Point z;
            if (level < -1.0 + 1e-12) {
                z = random_real_point(rng);
            } else if (level > 1.0 - 1e-12) {
                z = random_quadric_point(rng);
            } else {
                // bisect along a blend from the real locus (kappa = -1) to
                // the quadric locus (kappa = +1)
                CP3Point zr = random_real_point(rng), zq = random_quadric_point(rng);
                double lo = 0.0, hi = 1.0;
                auto at = [&](double s) {
                    CP3Point w = (1.0 - s) * zr + s * zq;
                    w.normalize();
                    return w;
                };
                for (int it = 0; it < 100; ++it) {
                    double mid = 0.5 * (lo + hi);
                    (kappa_cp3(at(mid)) < level ? lo : hi) = mid;
                }
                z = at(0.5 * (lo + hi));
            }
            std::vector<double> row;
            for (int i = 0; i < 4; ++i) {
                row.push_back(z(i).real());
                row.push_back(z(i).imag());
            }
            row.push_back(kappa_cp3(z));
            csv.write_row(row);
        }
        if (!o.json)
            std::printf("%d cp3-level samples written to %s\n", count,
                        cfg.output_dir.c_str());
    } else {
        std::string fname = "sample_" + target + ".csv";
        for (auto& ch : fname)
            if (ch == '-') ch = '_';
        CsvWriter csv(out_path(cfg, fname), rep_header());
        for (int n = 0; n < count; ++n) {
            SurfaceRep r;
            if (target == "level-set-kappa") {
                r = sample_level_kappa(level, rng);
            } else if (target == "psi-image") {
                r = psi_param(rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI),
                              rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI),
                              rng.uniform(0, PI));
            } else if (target == "abelian-locus") {
                Vec3 P = rng.random_s2();
                r = {exp_im(P, rng.uniform(0, TWO_PI)), exp_im(P, rng.uniform(0, TWO_PI)),
                     exp_im(P, rng.uniform(0, TWO_PI)), exp_im(P, rng.uniform(0, TWO_PI))};
            } else {
                throw CLI::ValidationError("unknown sample target: " + target);
            }
            write_rep_row(csv, r);
        }
        if (!o.json)
            std::printf("%d %s samples written to %s\n", count, target.c_str(),
                        cfg.output_dir.c_str());
    }
    if (o.json) {
        ordered_json report;
        report["command"] = "sample";
        report["target"] = target;
        report["level"] = fmt17(level);
        report["count"] = count;
        std::printf("%s\n", report.dump(2).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for the SU(2) character variety of the genus-two surface"};
    app.require_subcommand(1);

    CommonOpts vo, co, fo, bo, io_, so;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "suite name or 'all'");
    add_common(verify, vo);

    int cp_grid = 12;
    auto* cpts = app.add_subcommand("critical-points", "Morse census of the pillow function");
    cpts->add_option("--grid", cp_grid, "Newton seeding grid per axis")->check(CLI::Range(8, 64));
    add_common(cpts, co);

    int n_lines = 100;
    auto* flow = app.add_subcommand("flow", "export gradient flow lines from the zero level");
    flow->add_option("--lines", n_lines, "number of flow lines");
    add_common(flow, fo);

    std::vector<double> v6;
    auto* fiber = app.add_subcommand("fiber", "branched-cover fiber over a point of S^5");
    fiber->add_option("v", v6, "six components of v")->expected(6);
    add_common(fiber, bo);

    double eps = 0.05;
    int is_grid = 16;
    auto* isect = app.add_subcommand("intersect", "Heegaard torus intersection solver");
    isect->add_option("--eps", eps, "perturbation strength (|eps| < 0.2)");
    isect->add_option("--grid", is_grid, "seeding grid per axis");
    add_common(isect, io_);

    std::string target;
    double level = 0.0;
    int count = 100;
    auto* sample = app.add_subcommand("sample", "sample conjugacy classes on a locus");
    sample->add_option("--target", target, "level-set-kappa | psi-image | abelian-locus | cp3-level")
        ->required();
    sample->add_option("--level", level, "level value for level-set targets");
    sample->add_option("--count", count, "number of samples");
    add_common(sample, so);

    try {
        app.parse(argc, argv);
        if (*verify) return cmd_verify(suite, vo);
        if (*cpts) return cmd_critical_points(cp_grid, co);
        if (*flow) return cmd_flow(n_lines, fo);
        if (*fiber) return cmd_fiber(v6, bo);
        if (*isect) return cmd_intersect(eps, is_grid, io_);
        if (*sample) return cmd_sample(target, level, count, so);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
