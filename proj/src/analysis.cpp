#include "cylsum/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cylsum {

namespace {

constexpr double kRefineFloor = 1e-300;

double rel_change(double prev, double cur) {
    return std::abs(cur - prev) / std::max(std::abs(cur), kRefineFloor);
}

std::vector<double> corner_point(int m) { return std::vector<double>(m, 1.0); }

// Gegenbauer-sum factors g_k(u) = ((k+lambda)/lambda) C_k^lambda(u); the
// lambda = 0 case (d=1, mu=0) uses the Chebyshev limit 2 T_k (1 for k=0).
std::vector<double> gegenbauer_sum_factors(int n, double lambda, double u) {
    std::vector<double> g(n + 1);
    if (lambda > 0.0) {
        const auto c = eval_gegenbauer_all(n, lambda, u);
        for (int k = 0; k <= n; ++k) g[k] = (k + lambda) / lambda * c[k];
        return g;
    }
    std::vector<double> t(n + 1);
    t[0] = 1.0;
    if (n >= 1) t[1] = u;
    for (int k = 2; k <= n; ++k) t[k] = 2.0 * u * t[k - 1] - t[k - 2];
    g[0] = 1.0;
    for (int k = 1; k <= n; ++k) g[k] = 2.0 * t[k];
    return g;
}

}  // namespace

CriticalIndexReport critical_delta(const CylinderSpace& space) {
    double sum_max = 0.0, sum_min = 0.0;
    for (int i = 0; i < space.m; ++i) {
        sum_max += std::max(space.alpha[i], space.beta[i]);
        sum_min += std::min(space.alpha[i], space.beta[i]);
    }
    CriticalIndexReport r;
    r.first_term = sum_max + space.mu + 0.5 * (space.d + space.m - 1);
    r.second_term = std::max(0.0, -sum_min - space.mu - 0.5 * (space.d + space.m + 1));
    r.bound = r.first_term + r.second_term;
    r.hypothesis_ok = space.alpha_beta_condition();
    return r;
}

LebesgueEstimate lebesgue_quantity(const CylinderSpace& space, int n, double delta,
                                   const std::vector<double>& xp,
                                   const std::vector<double>& yp,
                                   int refinement_level) {
    if (n < 0 || delta < 0.0)
        throw std::invalid_argument("lebesgue_quantity: need n >= 0, delta >= 0");
    if ((int)xp.size() != space.m || (int)yp.size() != space.d)
        throw std::invalid_argument("lebesgue_quantity: evaluation point has wrong dimensions");
    const CesaroCoeffs plan(n, delta);

    auto estimate = [&](int degree) {
        const QuadratureRule rule = cylinder_rule(space, degree);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double* node = rule.node(q);
            const double v =
                cesaro_kernel(space, plan, node, xp.data(), node + space.m, yp.data());
            if (!std::isfinite(v))
                throw std::runtime_error("lebesgue_quantity: non-finite kernel value");
            sum += rule.weights[q] * std::abs(v);
        }
        return sum;
    };

    int degree = 4 * n + 16;
    double prev = estimate(degree);
    double cur = prev;
    for (int level = 0; level < std::max(1, refinement_level); ++level) {
        degree *= 2;
        prev = cur;
        cur = estimate(degree);
    }
    LebesgueEstimate est;
    est.n = n;
    est.delta = delta;
    est.value = cur;
    est.refinement = rel_change(prev, cur);
    est.reliable = est.refinement <= 0.05;
    return est;
}

LebesgueEstimate lebesgue_quantity_at_corner(const CylinderSpace& space, int n,
                                             double delta,
                                             const std::vector<double>& yp,
                                             int refinement_level) {
    return lebesgue_quantity(space, n, delta, corner_point(space.m), yp,
                             refinement_level);
}

LebesgueEstimate lebesgue_sup(const CylinderSpace& space, int n, double delta,
                              const std::vector<double>& grid,
                              int refinement_level) {
    if (grid.empty() || grid.size() % space.d != 0)
        throw std::invalid_argument("lebesgue_sup: grid must hold >= 1 ball point");
    const std::size_t n_pts = grid.size() / space.d;
    LebesgueEstimate best;
    bool first = true;
    for (std::size_t i = 0; i < n_pts; ++i) {
        std::vector<double> yp(grid.begin() + i * space.d,
                               grid.begin() + (i + 1) * space.d);
        LebesgueEstimate e =
            lebesgue_quantity_at_corner(space, n, delta, yp, refinement_level);
        if (first || e.value > best.value) {
            best = e;
            best.argmax_y = yp;
            first = false;
        }
    }
    return best;
}

std::vector<double> ball_grid(int d, int n_radii, int n_angles) {
    std::vector<double> pts;
    if (d == 1) {
        const int n = std::max(2, n_radii);
        for (int k = 0; k < n; ++k) pts.push_back(std::cos(M_PI * k / (n - 1)));
        return pts;
    }
    if (d != 2) throw std::invalid_argument("ball_grid: d must be 1 or 2");
    const int nr = std::max(2, n_radii);
    const int na = std::max(1, n_angles);
    for (int i = 0; i < nr; ++i) {
        const double r = 0.5 * (std::cos(M_PI * i / (nr - 1)) + 1.0);
        for (int k = 0; k < na; ++k) {
            const double t = 2.0 * M_PI * k / na;
            pts.push_back(r * std::cos(t));
            pts.push_back(r * std::sin(t));
        }
    }
    return pts;
}

double dlambda(double lambda, double v, double p, double u) {
    if (lambda < 0.5) throw std::invalid_argument("dlambda: lambda must be >= 1/2");
    const double disc = 1.0 - v * v - p * p - u * u + 2.0 * u * p * v;
    if (disc < 0.0) return 0.0;
    const double denom =
        std::pow((1.0 - v * v) * (1.0 - u * u) * (1.0 - p * p), lambda);
    return std::pow(disc, lambda - 0.5) / denom;
}

std::pair<double, double> dlambda_identity_check(double lambda, double v, double u,
                                                 int node_count) {
    if (node_count < 1)
        throw std::invalid_argument("dlambda_identity_check: need node_count >= 1");
    // Support of the integrand: |p - uv| <= sqrt((1-u^2)(1-v^2)).
    const double half = std::sqrt((1.0 - u * u) * (1.0 - v * v));
    const double mid = u * v;
    const QuadratureRule gl = gauss_jacobi_rule(node_count, {0.0, 0.0});
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.size(); ++i) {
        const double p = mid + half * gl.nodes[i];
        sum += half * gl.weights[i] *
               dlambda(lambda, v, p, u) * std::pow(1.0 - p * p, lambda);
    }
    const double exact =
        std::pow(2.0, 2.0 * lambda) *
        std::exp(2.0 * std::lgamma(lambda + 0.5) - std::lgamma(2.0 * lambda + 1.0));
    return {sum, exact};
}

MajorantProbe majorant_probe(const CylinderSpace& space, int n, double delta,
                             const std::vector<double>& x,
                             const std::vector<double>& yp,
                             int refinement_level) {
    if ((int)x.size() != space.m || (int)yp.size() != space.d)
        throw std::invalid_argument("majorant_probe: point has wrong dimensions");
    const CesaroCoeffs plan(n, delta);
    const std::vector<double> e = corner_point(space.m);
    const auto cube = cube_kernel_slices(space, n, x.data(), e.data());
    const double lambda = space.mu + 0.5 * (space.d - 1);

    auto lhs_estimate = [&](int degree) {
        const QuadratureRule rule = ball_rule(space.d, space.mu, degree);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto ball =
                ball_kernel_compact_all(n, space.d, space.mu, rule.node(q), yp.data());
            double kd = 0.0;
            for (int k = 0; k <= n; ++k) {
                double slice = 0.0;
                for (int j = 0; j <= k; ++j) slice += cube[j] * ball[k - j];
                kd += plan.coeffs[k] * slice;
            }
            sum += rule.weights[q] * std::abs(kd);
        }
        return sum;
    };

    // F_{n}^{delta}(u; x) = sum_j c_{n,j} sum_{k<=j} g_k(u) cube_{j-k}(x, e)
    // integrated against (1-u^2)^{(d-2)/2 + mu}.
    const double expo = 0.5 * (space.d - 2) + space.mu;
    auto rhs_estimate = [&](int degree) {
        const QuadratureRule rule = gauss_jacobi_rule(degree / 2 + 1, {expo, expo});
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto g = gegenbauer_sum_factors(n, lambda, rule.nodes[q]);
            double fval = 0.0;
            for (int j = 0; j <= n; ++j) {
                double inner = 0.0;
                for (int k = 0; k <= j; ++k) inner += g[k] * cube[j - k];
                fval += plan.coeffs[j] * inner;
            }
            sum += rule.weights[q] * std::abs(fval);
        }
        return sum;
    };

    MajorantProbe probe;
    int degree = 4 * n + 16;
    double lhs_prev = lhs_estimate(degree), rhs_prev = rhs_estimate(degree);
    double lhs_cur = lhs_prev, rhs_cur = rhs_prev;
    for (int level = 0; level < std::max(1, refinement_level); ++level) {
        degree *= 2;
        lhs_prev = lhs_cur;
        rhs_prev = rhs_cur;
        lhs_cur = lhs_estimate(degree);
        rhs_cur = rhs_estimate(degree);
    }
    probe.lhs = lhs_cur;
    probe.rhs = rhs_cur;
    probe.lhs_refinement = rel_change(lhs_prev, lhs_cur);
    probe.rhs_refinement = rel_change(rhs_prev, rhs_cur);
    probe.reliable = probe.lhs_refinement <= 0.05 && probe.rhs_refinement <= 0.05;
    return probe;
}

double error_norm(const ExpansionCoeffs& coeffs, const CesaroCoeffs& plan,
                  const CylinderFn& f, int p, int rule_degree,
                  int cube_grid_points, const std::vector<double>& ball_grid_pts) {
    const CylinderSpace& space = coeffs.space;
    if (p == 1 || p == 2) {
        const QuadratureRule rule = cylinder_rule(space, rule_degree);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double* node = rule.node(q);
            const double diff = cesaro_sum_eval(coeffs, plan, node, node + space.m) -
                                f(node, node + space.m);
            sum += rule.weights[q] * (p == 1 ? std::abs(diff) : diff * diff);
        }
        return p == 1 ? sum : std::sqrt(sum);
    }
    if (p != 0)
        throw std::invalid_argument("error_norm: p must be 1, 2, or 0 (sup norm)");
    // Sup over the tensor grid: Chebyshev extrema per cube axis x ball grid.
    const int ng = std::max(2, cube_grid_points);
    std::vector<double> cube_pts(ng);
    for (int k = 0; k < ng; ++k) cube_pts[k] = std::cos(M_PI * k / (ng - 1));
    const std::size_t n_ball = ball_grid_pts.size() / space.d;
    std::vector<int> idx(space.m, 0);
    std::vector<double> x(space.m);
    double worst = 0.0;
    while (true) {
        for (int i = 0; i < space.m; ++i) x[i] = cube_pts[idx[i]];
        for (std::size_t b = 0; b < n_ball; ++b) {
            const double* y = ball_grid_pts.data() + b * space.d;
            const double diff =
                cesaro_sum_eval(coeffs, plan, x.data(), y) - f(x.data(), y);
            worst = std::max(worst, std::abs(diff));
        }
        int i = space.m - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < ng) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return worst;
}

std::vector<ConvergenceRow> convergence_experiment(
    const CylinderSpace& space, const CylinderFn& f,
    const std::vector<int>& n_list, const std::vector<double>& delta_list,
    int cube_grid_points, int ball_radii, int ball_angles,
    bool with_lebesgue) {
    if (n_list.empty() || delta_list.empty())
        throw std::invalid_argument("convergence_experiment: empty n or delta list");
    const int n_max = *std::max_element(n_list.begin(), n_list.end());
    const int rule_degree = 2 * n_max + 16;
    const ExpansionCoeffs coeffs = expand(space, n_max, f, rule_degree);
    const std::vector<double> grid = ball_grid(space.d, ball_radii, ball_angles);

    std::vector<ConvergenceRow> rows;
    for (double delta : delta_list)
        for (int n : n_list) {
            const CesaroCoeffs plan(n, delta);
            ConvergenceRow row;
            row.delta = delta;
            row.n = n;
            row.l1 = error_norm(coeffs, plan, f, 1, rule_degree, cube_grid_points, grid);
            row.l2 = error_norm(coeffs, plan, f, 2, rule_degree, cube_grid_points, grid);
            row.sup = error_norm(coeffs, plan, f, 0, rule_degree, cube_grid_points, grid);
            row.lebesgue = 0.0;
            row.lebesgue_refinement = 0.0;
            row.reliable = true;
            if (with_lebesgue) {
                const LebesgueEstimate leb = lebesgue_sup(space, n, delta, grid);
                row.lebesgue = leb.value;
                row.lebesgue_refinement = leb.refinement;
                row.reliable = leb.reliable;
            }
            rows.push_back(row);
        }
    return rows;
}

}  // namespace cylsum
