#pragma once

// Run configuration: seed, tolerance overrides, sample counts, output paths.
// Config files are flat key=value text; CLI flags override file values.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace genus2 {

struct Config {
    std::uint64_t seed = 0;
    std::string output_dir = ".";
    std::map<std::string, double> tol;     // tolerance overrides by name
    std::map<std::string, long> counts;    // sample-count overrides by suite

    // Defaults per the module contracts.
    double get_tol(const std::string& name) const {
        auto it = tol.find(name);
        if (it != tol.end()) {
            if (it->second <= 0) throw std::domain_error("tolerance must be positive: " + name);
            return it->second;
        }
        static const std::map<std::string, double> defaults = {
            {"tau_unit", 1e-12}, {"tau_rel", 1e-9},    {"tau_ab", 1e-8},
            {"tau_B", 1e-10},    {"tau_flow", 1e-6},   {"tau_svd", 1e-8},
            {"margin_min", 1e-4}, {"r_corner", 1e-3},  {"delta_lambda", 1e-3},
            {"delta_twist", 1e-6}, {"newton_tol", 1e-10},
        };
        auto jt = defaults.find(name);
        if (jt == defaults.end()) throw std::domain_error("unknown tolerance: " + name);
        return jt->second;
    }

    long get_count(const std::string& suite, long dflt) const {
        auto it = counts.find(suite);
        return it == counts.end() ? dflt : it->second;
    }

    void set_kv(const std::string& key, const std::string& val) {
        if (key == "seed") {
            seed = std::stoull(val);
        } else if (key == "output_dir") {
            output_dir = val;
        } else if (key.rfind("count.", 0) == 0) {
            counts[key.substr(6)] = std::stol(val);
        } else {
            tol[key] = std::stod(val);
        }
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto h = line.find('#');
            if (h != std::string::npos) line.erase(h);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
            };
            std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (!key.empty() && !val.empty()) set_kv(key, val);
        }
    }
};

}  // namespace genus2
