#include <doctest.h>

#include <cmath>
#include <vector>

#include "cylsum/analysis.hpp"
#include "cylsum/cylinder.hpp"
#include "cylsum/testfunctions.hpp"

using namespace cylsum;

namespace {

const CylinderSpace cheb(1, 1, 0.0, {-0.5}, {-0.5});
const CylinderSpace disk(2, 1, 0.5, {0.0}, {0.0});

double next01(double& seed) {
    seed = std::fmod(seed * 997.0 + 0.123, 1.0);
    return seed;
}

}  // namespace

TEST_CASE("basis enumeration counts") {
    CHECK(enumerate_basis(cheb, 0).size() == 1);
    CHECK(enumerate_basis(cheb, 3).size() == 10);
    CHECK(enumerate_basis(disk, 2).size() == 10);
    // ordering: by total degree, then cube degree
    const auto basis = enumerate_basis(disk, 4);
    for (std::size_t t = 1; t < basis.size(); ++t) {
        const int d0 = basis[t - 1].total_degree(), d1 = basis[t].total_degree();
        CHECK(d0 <= d1);
        if (d0 == d1) CHECK(basis[t - 1].cube_degree() <= basis[t].cube_degree());
    }
    CHECK_THROWS(enumerate_basis(cheb, -1));
}

TEST_CASE("degree-0 element and separability") {
    const auto basis = enumerate_basis(cheb, 2);
    const double x = 0.3, y = -0.6;
    CHECK(eval_basis(cheb, basis[0], &x, &y) ==
          doctest::Approx(1.0 / std::sqrt(cheb.weight_mass())).epsilon(1e-14));
    // separability of a mixed element: gamma = 1, ball degree 1
    for (const auto& idx : basis)
        if (idx.cube_degree() == 1 && idx.ball.n == 1) {
            const double v = eval_basis(cheb, idx, &x, &y);
            const double cube = eval_orthonormal_jacobi(1, cheb.axis_params(0), x);
            const double ball = eval_ball_basis(idx.ball, &y);
            CHECK(v == doctest::Approx(cube * ball).epsilon(1e-15));
        }
}

TEST_CASE("eval_basis_all matches element-wise evaluation") {
    for (const CylinderSpace& sp : {cheb, disk}) {
        const auto basis = enumerate_basis(sp, 5);
        const std::vector<double> x{0.22}, y = sp.d == 1 ? std::vector<double>{-0.4}
                                                         : std::vector<double>{-0.4, 0.5};
        const auto all = eval_basis_all(sp, basis, 5, x.data(), y.data());
        for (std::size_t t = 0; t < basis.size(); ++t)
            CHECK(all[t] == doctest::Approx(eval_basis(sp, basis[t], x.data(),
                                                       y.data())).epsilon(1e-13));
    }
}

TEST_CASE("cylinder Gram matrix to degree 4") {
    for (const CylinderSpace& sp : {cheb, disk}) {
        const auto basis = enumerate_basis(sp, 4);
        const auto rule = cylinder_rule(sp, 10);
        const std::size_t nb = basis.size();
        std::vector<double> gram(nb * nb, 0.0);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto v = eval_basis_all(sp, basis, 4, rule.node(q), rule.node(q) + sp.m);
            for (std::size_t a = 0; a < nb; ++a)
                for (std::size_t b = a; b < nb; ++b)
                    gram[a * nb + b] += rule.weights[q] * v[a] * v[b];
        }
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = a; b < nb; ++b)
                CHECK(std::abs(gram[a * nb + b] - (a == b ? 1.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("kernel symmetry and degree-0 value") {
    const double x = 0.4, xp = -0.7, y = 0.2, yp = -0.5;
    CHECK(kernel(cheb, 5, &x, &xp, &y, &yp) ==
          doctest::Approx(kernel(cheb, 5, &xp, &x, &yp, &y)).epsilon(1e-12));
    CHECK(kernel(cheb, 0, &x, &xp, &y, &yp) ==
          doctest::Approx(1.0 / cheb.weight_mass()).epsilon(1e-13));
}

TEST_CASE("kernel slices are consistent across degrees") {
    const double x = 0.15, xp = 0.8, y = -0.33, yp = 0.6;
    const auto s5 = kernel_slices(cheb, 5, &x, &xp, &y, &yp);
    const auto s4 = kernel_slices(cheb, 4, &x, &xp, &y, &yp);
    for (int k = 0; k <= 4; ++k) CHECK(s5[k] == doctest::Approx(s4[k]).epsilon(1e-13));
    CHECK(kernel(cheb, 5, &x, &xp, &y, &yp) - kernel(cheb, 4, &x, &xp, &y, &yp) ==
          doctest::Approx(s5[5]).epsilon(1e-11));
}

TEST_CASE("kernel slices match the direct basis sum") {
    for (const CylinderSpace& sp : {cheb, disk}) {
        const int n = 6;
        const auto basis = enumerate_basis(sp, n);
        const std::vector<double> x{0.3}, xp{-0.2},
            y = sp.d == 1 ? std::vector<double>{-0.4} : std::vector<double>{-0.4, 0.45},
            yp = sp.d == 1 ? std::vector<double>{0.6} : std::vector<double>{0.6, -0.1};
        const auto v1 = eval_basis_all(sp, basis, n, x.data(), y.data());
        const auto v2 = eval_basis_all(sp, basis, n, xp.data(), yp.data());
        std::vector<double> direct(n + 1, 0.0);
        for (std::size_t t = 0; t < basis.size(); ++t)
            direct[basis[t].total_degree()] += v1[t] * v2[t];
        const auto slices = kernel_slices(sp, n, x.data(), xp.data(), y.data(), yp.data());
        for (int k = 0; k <= n; ++k)
            CHECK(std::abs(slices[k] - direct[k]) < 1e-12);
    }
}

TEST_CASE("cesaro kernel") {
    const double x = 0.1, xp = 0.9, y = 0.5, yp = -0.2;
    SUBCASE("delta = 0 equals the plain kernel") {
        const CesaroCoeffs plan(7, 0.0);
        CHECK(cesaro_kernel(cheb, plan, &x, &xp, &y, &yp) ==
              doctest::Approx(kernel(cheb, 7, &x, &xp, &y, &yp)).epsilon(1e-12));
    }
    SUBCASE("n = 0 for any delta") {
        for (double delta : {0.0, 1.0, 2.5}) {
            const CesaroCoeffs plan(0, delta);
            CHECK(cesaro_kernel(cheb, plan, &x, &xp, &y, &yp) ==
                  doctest::Approx(1.0 / cheb.weight_mass()).epsilon(1e-13));
        }
    }
    SUBCASE("linear in the slice weights") {
        const CesaroCoeffs p1(5, 0.5), p2(5, 2.0);
        CesaroCoeffs sum = p1;
        for (int k = 0; k <= 5; ++k) sum.coeffs[k] += p2.coeffs[k];
        const double v = cesaro_kernel(cheb, p1, &x, &xp, &y, &yp) +
                         cesaro_kernel(cheb, p2, &x, &xp, &y, &yp);
        CHECK(cesaro_kernel(cheb, sum, &x, &xp, &y, &yp) ==
              doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("expansion of a basis element picks out its coefficient") {
    const auto basis = enumerate_basis(cheb, 3);
    const std::size_t target = 7;
    auto f = [&](const double* x, const double* y) {
        return eval_basis(cheb, basis[target], x, y);
    };
    const auto ec = expand(cheb, 3, f, 8);
    for (std::size_t t = 0; t < ec.coeffs.size(); ++t)
        CHECK(std::abs(ec.coeffs[t] - (t == target ? 1.0 : 0.0)) < 1e-9);
}

TEST_CASE("expansion of a constant") {
    auto one = [](const double*, const double*) { return 1.0; };
    const auto ec = expand(disk, 2, one, 6);
    CHECK(ec.coeffs[0] == doctest::Approx(std::sqrt(disk.weight_mass())).epsilon(1e-12));
    for (std::size_t t = 1; t < ec.coeffs.size(); ++t) CHECK(std::abs(ec.coeffs[t]) < 1e-12);
}

TEST_CASE("expansion is linear") {
    auto f = make_test_function("exp_x1y1", {}, 1);
    auto g = make_test_function("abs_x1", {}, 1);
    auto combo = [&](const double* x, const double* y) {
        return 2.0 * f(x, y) - 0.5 * g(x, y);
    };
    const auto ef = expand(cheb, 4, f, 20);
    const auto eg = expand(cheb, 4, g, 20);
    const auto ec = expand(cheb, 4, combo, 20);
    for (std::size_t t = 0; t < ec.coeffs.size(); ++t)
        CHECK(std::abs(ec.coeffs[t] - (2.0 * ef.coeffs[t] - 0.5 * eg.coeffs[t])) < 1e-12);
}

TEST_CASE("expand rejects an under-resolved rule") {
    auto one = [](const double*, const double*) { return 1.0; };
    CHECK_THROWS(expand(cheb, 4, one, 7));
}

TEST_CASE("cesaro sum evaluation") {
    const int n = 5;
    // polynomial in the span with fixed pseudo-random coefficients
    const auto basis = enumerate_basis(cheb, n);
    std::vector<double> coef(basis.size());
    double seed = 0.7;
    for (auto& c : coef) c = 2.0 * next01(seed) - 1.0;
    auto f = [&](const double* x, const double* y) {
        const auto vals = eval_basis_all(cheb, basis, n, x, y);
        double s = 0.0;
        for (std::size_t t = 0; t < vals.size(); ++t) s += coef[t] * vals[t];
        return s;
    };
    const auto ec = expand(cheb, n, f, 2 * n + 2);

    SUBCASE("delta = 0 reproduces the polynomial") {
        for (double xp : {-0.8, 0.1, 0.65})
            for (double yp : {-0.5, 0.9}) {
                const CesaroCoeffs plan(n, 0.0);
                CHECK(std::abs(cesaro_sum_eval(ec, plan, &xp, &yp) - f(&xp, &yp)) < 1e-8);
            }
    }
    SUBCASE("delta = 0 collapse is bitwise") {
        const CesaroCoeffs plan(n, 0.0);
        for (double xp : {-0.8, 0.1, 0.65}) {
            const double yp = 0.3;
            CHECK(cesaro_sum_eval(ec, plan, &xp, &yp) == partial_sum_eval(ec, n, &xp, &yp));
        }
    }
    SUBCASE("coefficient path agrees with the kernel-integral path") {
        double seed2 = 0.11;
        for (int rep = 0; rep < 10; ++rep) {
            const double xp = 2.0 * next01(seed2) - 1.0;
            const double yp = 2.0 * next01(seed2) - 1.0;
            const double a = cesaro_sum_eval(ec, CesaroCoeffs(n, 0.7), &xp, &yp);
            const double b = cesaro_sum_by_kernel(cheb, n, 0.7, f, 2 * n + 2, &xp, &yp);
            CHECK(std::abs(a - b) < 1e-8);
        }
    }
    SUBCASE("plan degree above the table is rejected") {
        const CesaroCoeffs plan(n + 1, 0.0);
        const double xp = 0.0, yp = 0.0;
        CHECK_THROWS(cesaro_sum_eval(ec, plan, &xp, &yp));
    }
}

TEST_CASE("constant functions are reproduced exactly for any order") {
    auto one = [](const double*, const double*) { return 1.0; };
    const auto ec = expand(cheb, 4, one, 10);
    for (double delta : {0.0, 0.5, 3.0}) {
        const CesaroCoeffs plan(4, delta);
        const double xp = 0.37, yp = -0.81;
        CHECK(cesaro_sum_eval(ec, plan, &xp, &yp) == doctest::Approx(1.0).epsilon(1e-12));
    }
}
