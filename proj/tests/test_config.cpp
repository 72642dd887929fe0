#include <doctest.h>

#include <cmath>

#include "cylsum/config.hpp"
#include "cylsum/report.hpp"

using namespace cylsum;

TEST_CASE("config round trip is lossless") {
    RunConfig cfg;
    CHECK(parse_config(emit_config(cfg)) == cfg);

    cfg.d = 2;
    cfg.mu = 0.5;
    cfg.alpha = {0.0};
    cfg.beta = {0.0};
    cfg.n_list = {4, 8, 16};
    cfg.delta_list = {0.0, 0.5, 1.5};
    cfg.function = "poly";
    cfg.poly_coeffs = {1.0, -0.3333333333333333, 0.1};
    cfg.seed = 987654321;
    cfg.perturb = 1e-3;
    cfg.format = "json";
    cfg.out = "/tmp/rows.json";
    CHECK(parse_config(emit_config(cfg)) == cfg);
}

TEST_CASE("17-digit doubles survive the round trip") {
    for (double v : {M_PI, 1.0 / 3.0, 0.1, -2.7182818284590452, 1e-300}) {
        RunConfig cfg;
        cfg.mu = std::abs(v);
        cfg.delta_list = {std::abs(v)};
        const RunConfig back = parse_config(emit_config(cfg));
        CHECK(back.mu == cfg.mu);
        CHECK(back.delta_list[0] == cfg.delta_list[0]);
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("parser accepts comments and blank lines") {
    const RunConfig cfg = parse_config(
        "# experiment setup\n"
        "\n"
        "d = 1\n"
        "mu = 0   # trailing comment\n"
        "alpha = -0.5\n");
    CHECK(cfg.d == 1);
    CHECK(cfg.alpha == std::vector<double>{-0.5});
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_config("no_such_key = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("d 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("mu = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_list = 1,2,x\n"), ConfigError);
}

TEST_CASE("validation catches cross-field problems") {
    RunConfig cfg;
    cfg.format = "xml";
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = RunConfig{};
    cfg.m = 2;  // alpha/beta still length 1
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = RunConfig{};
    cfg.delta_list = {-0.5};
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);

    cfg = RunConfig{};
    cfg.d = 3;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("csv report shape") {
    RunConfig cfg;
    Report rep{"bound", cfg, {}};
    rep.rows.push_back({"bound", 0, 0.0, "bound", 1.5, 0.0, 0.01, ""});
    const std::string csv = rep.to_csv();
    CHECK(csv.rfind("command,d,m,mu,alpha,beta,n,delta,quantity,value,refinement,seconds,flag\n",
                    0) == 0);
    CHECK(csv.find("bound,1,1,0,-0.5,-0.5,0,0,bound,1.5,0,") != std::string::npos);
}

TEST_CASE("json report carries config echo and version") {
    RunConfig cfg;
    Report rep{"dlambda", cfg, {}};
    rep.rows.push_back({"dlambda", 0, 1.0, "exact", M_PI / 2.0, 0.0, 0.0, ""});
    const std::string js = rep.to_json();
    CHECK(js.find("\"tool_version\"") != std::string::npos);
    CHECK(js.find("\"command\"") != std::string::npos);
    CHECK(js.find("1.5707963267948966") != std::string::npos);
}
