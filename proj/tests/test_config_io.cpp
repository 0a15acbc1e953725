#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "genus2/config.hpp"
#include "genus2/io.hpp"
#include "genus2/quat.hpp"

using namespace genus2;

TEST_CASE("tolerance defaults and overrides") {
    Config cfg;
    CHECK(cfg.get_tol("tau_rel") == 1e-9);
    CHECK(cfg.get_tol("tau_flow") == 1e-6);
    CHECK(cfg.get_tol("margin_min") == 1e-4);
    cfg.tol["tau_rel"] = 1e-7;
    CHECK(cfg.get_tol("tau_rel") == 1e-7);
    CHECK_THROWS_AS(cfg.get_tol("no_such_tolerance"), std::domain_error);
    cfg.tol["tau_flow"] = -1.0;
    CHECK_THROWS_AS(cfg.get_tol("tau_flow"), std::domain_error);
}

TEST_CASE("key=value assignment routing") {
    Config cfg;
    cfg.set_kv("seed", "99");
    cfg.set_kv("output_dir", "/tmp/somewhere");
    cfg.set_kv("count.lagr_psi", "500");
    cfg.set_kv("tau_svd", "1e-6");
    CHECK(cfg.seed == 99);
    CHECK(cfg.output_dir == "/tmp/somewhere");
    CHECK(cfg.get_count("lagr_psi", 10000) == 500);
    CHECK(cfg.get_count("unset", 123) == 123);
    CHECK(cfg.get_tol("tau_svd") == 1e-6);
}

TEST_CASE("config file parsing with comments and blanks") {
    std::string path = "/tmp/genus2_test_config.txt";
    {
        std::ofstream out(path);
        out << "# full-line comment\n"
            << "seed = 1234\n"
            << "\n"
            << "tau_rel = 1e-8   # trailing comment\n"
            << "count.flow_lines=7\n"
            << "not a key value line\n";
    }
    Config cfg;
    cfg.load_file(path);
    CHECK(cfg.seed == 1234);
    CHECK(cfg.get_tol("tau_rel") == 1e-8);
    CHECK(cfg.get_count("flow_lines", 0) == 7);
    std::remove(path.c_str());
    CHECK_THROWS_AS(cfg.load_file("/nonexistent/path/cfg.txt"), std::runtime_error);
}

TEST_CASE("17-significant-digit formatting round-trips doubles") {
    CHECK(fmt17(0.5) == "0.5");
    CHECK(fmt17(0.0) == "0");
    CHECK(fmt17(-1.0) == "-1");
    Rng rng(6);
    for (int n = 0; n < 1000; ++n) {
        double x = rng.gauss() * std::pow(10.0, rng.uniform(-8, 8));
        CHECK(std::stod(fmt17(x)) == x);
    }
}

TEST_CASE("csv writer emits header and formatted rows") {
    std::string path = "/tmp/genus2_test_out.csv";
    {
        CsvWriter w(path, {"x", "y", "tag"});
        w.write_row({1.0 / 3.0, -2.0}, "corner");
        w.write_row({0.25, 4.0});
    }
    std::ifstream in(path);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1 == "x,y,tag");
    CHECK(l2 == "0.33333333333333331,-2,corner");
    CHECK(l3 == "0.25,4");
    std::remove(path.c_str());
    CHECK_THROWS_AS(CsvWriter("/nonexistent/dir/out.csv", {"a"}), std::runtime_error);
}

TEST_CASE("ordered json preserves insertion order") {
    ordered_json j;
    j["zeta"] = 1;
    j["alpha"] = fmt17(2.5);
    j["mid"] = ordered_json::array({1, 2, 3});
    std::string s = j.dump();
    CHECK(s.find("zeta") < s.find("alpha"));
    CHECK(s.find("alpha") < s.find("mid"));
}
