#include <doctest.h>

#include <cmath>
#include <vector>

#include "cylsum/quadrature.hpp"
#include "cylsum/space.hpp"

using namespace cylsum;

TEST_CASE("one-point Gauss-Legendre") {
    const auto rule = gauss_jacobi_rule(1, {0.0, 0.0});
    REQUIRE(rule.size() == 1);
    CHECK(std::abs(rule.nodes[0]) < 1e-15);
    CHECK(rule.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("two-point rule integrates x^2 exactly") {
    const auto rule = gauss_jacobi_rule(2, {0.0, 0.0});
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    CHECK(s == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("five-point Gauss-Chebyshev closed form") {
    const auto rule = gauss_jacobi_rule(5, {-0.5, -0.5});
    REQUIRE(rule.size() == 5);
    // ascending nodes: cos((2k-1)pi/10) for k = 5..1
    for (int i = 0; i < 5; ++i) {
        const double expect = std::cos((2.0 * (5 - i) - 1.0) * M_PI / 10.0);
        CHECK(std::abs(rule.nodes[i] - expect) < 1e-13);
        CHECK(std::abs(rule.weights[i] - M_PI / 5.0) < 1e-13);
    }
}

TEST_CASE("gauss rule structural invariants") {
    for (const JacobiParams p : {JacobiParams{0.0, 0.0}, JacobiParams{-0.5, -0.5},
                                 JacobiParams{1.3, -0.7}})
        for (int n : {1, 2, 7, 40}) {
            const auto rule = gauss_jacobi_rule(n, p);
            REQUIRE((int)rule.size() == n);
            for (std::size_t i = 0; i < rule.size(); ++i) {
                CHECK(rule.weights[i] > 0.0);
                CHECK(rule.nodes[i] > -1.0);
                CHECK(rule.nodes[i] < 1.0);
                if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            }
            const double mass = jacobi_weight_mass(p);
            CHECK(std::abs(rule.total_weight() - mass) <= 1e-12 * mass);
        }
    CHECK_THROWS(gauss_jacobi_rule(0, {0.0, 0.0}));
}

TEST_CASE("node interlacing between N and N+1 point rules") {
    for (const JacobiParams p : {JacobiParams{0.0, 0.0}, JacobiParams{0.5, -0.25}})
        for (int n : {3, 8, 15}) {
            const auto a = gauss_jacobi_rule(n, p);
            const auto b = gauss_jacobi_rule(n + 1, p);
            for (int i = 0; i < n; ++i) {
                CHECK(b.nodes[i] < a.nodes[i]);
                CHECK(a.nodes[i] < b.nodes[i + 1]);
            }
        }
}

TEST_CASE("gaussian exactness against orthonormality") {
    // products phat_a * phat_b have degree a+b <= 2N-1 and integral delta_ab
    const JacobiParams p{0.7, -0.3};
    const int N = 6;
    const auto rule = gauss_jacobi_rule(N, p);
    for (int a = 0; a <= N; ++a)
        for (int b = 0; b + a <= 2 * N - 1 && b <= N; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i)
                s += rule.weights[i] * eval_orthonormal_jacobi(a, p, rule.nodes[i]) *
                     eval_orthonormal_jacobi(b, p, rule.nodes[i]);
            CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("doubling stability on a smooth non-polynomial") {
    auto exp_first = [](const double* x) { return std::exp(x[0]); };
    const double v1 = integrate(exp_first, gauss_jacobi_rule(32, {-0.5, 0.25}));
    const double v2 = integrate(exp_first, gauss_jacobi_rule(64, {-0.5, 0.25}));
    CHECK(std::abs(v1 - v2) < 1e-8);
}

TEST_CASE("cube product rule") {
    SUBCASE("m=1 reduces to the univariate rule") {
        const auto uni = gauss_jacobi_rule(4, {0.3, 0.1});
        const auto cube = product_rule_cube(4, {{0.3, 0.1}});
        REQUIRE(cube.size() == uni.size());
        for (std::size_t i = 0; i < uni.size(); ++i) {
            CHECK(cube.nodes[i] == uni.nodes[i]);
            CHECK(cube.weights[i] == uni.weights[i]);
        }
    }
    SUBCASE("separable monomial") {
        const auto rule = product_rule_cube(3, {{0.0, 0.0}, {0.0, 0.0}});
        auto f = [](const double* x) { return x[0] * x[0] * x[1] * x[1] * x[1] * x[1]; };
        CHECK(integrate(f, rule) == doctest::Approx((2.0 / 3.0) * (2.0 / 5.0)).epsilon(1e-13));
    }
    SUBCASE("chebyshev weight sum is pi^2") {
        const auto rule = product_rule_cube(4, {{-0.5, -0.5}, {-0.5, -0.5}});
        CHECK(rule.total_weight() == doctest::Approx(M_PI * M_PI).epsilon(1e-13));
    }
    CHECK_THROWS(product_rule_cube(3, {}));
}

TEST_CASE("ball rule masses") {
    CHECK(ball_rule(2, 0.5, 8).total_weight() == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(ball_rule(2, 1.5, 8).total_weight() == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK_THROWS(ball_rule(3, 0.5, 4));
    CHECK_THROWS(ball_rule(2, -0.1, 4));
}

TEST_CASE("d=1 ball rule is Gauss-Chebyshev at mu=0") {
    const auto ball = ball_rule(1, 0.0, 9);
    const auto cheb = gauss_jacobi_rule(5, {-0.5, -0.5});
    REQUIRE(ball.size() == cheb.size());
    for (std::size_t i = 0; i < cheb.size(); ++i) {
        CHECK(ball.nodes[i] == cheb.nodes[i]);
        CHECK(ball.weights[i] == cheb.weights[i]);
    }
}

TEST_CASE("d=2 ball rule polynomial exactness") {
    // int_{B^2} y1^2 dy = pi/4;  int y1^2 y2^2 dy = pi/24;  odd powers vanish
    const auto rule = ball_rule(2, 0.5, 6);
    auto m20 = [](const double* y) { return y[0] * y[0]; };
    auto m22 = [](const double* y) { return y[0] * y[0] * y[1] * y[1]; };
    auto m30 = [](const double* y) { return y[0] * y[0] * y[0]; };
    CHECK(integrate(m20, rule) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    CHECK(integrate(m22, rule) == doctest::Approx(M_PI / 24.0).epsilon(1e-12));
    CHECK(std::abs(integrate(m30, rule)) < 1e-14);
}

TEST_CASE("cylinder rule") {
    const CylinderSpace cheb(1, 1, 0.0, {-0.5}, {-0.5});
    const auto rule = cylinder_rule(cheb, 6);
    CHECK(rule.total_weight() == doctest::Approx(M_PI * M_PI).epsilon(1e-12));
    // separable: int x^2 w dx * int y^2 w dy = (pi/2)^2
    auto f = [](const double* p) { return p[0] * p[0] * p[1] * p[1]; };
    CHECK(integrate(f, rule) == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-12));
    CHECK_THROWS(CylinderSpace(1, 0, 0.0, {}, {}));
}

TEST_CASE("integrate rejects non-finite values") {
    const auto rule = gauss_jacobi_rule(3, {0.0, 0.0});
    auto bad = [](const double*) { return std::nan(""); };
    CHECK_THROWS(integrate(bad, rule));
}
