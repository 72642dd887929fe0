#include "cylsum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cylsum {

double QuadratureRule::total_weight() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

namespace {

// Implicit-QL eigensolve of a symmetric tridiagonal matrix, tracking only
// the first component of each eigenvector (all that Golub-Welsch needs).
// d: diagonal (overwritten with eigenvalues), e: subdiagonal (destroyed),
// z: starts as (1, 0, ..., 0) and ends as the first eigenvector row.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = (int)d.size();
    e.push_back(0.0);  // sentinel
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > 60)
                throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigensolve failed");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int n_nodes, const JacobiParams& p) {
    if (n_nodes < 1) throw std::invalid_argument("gauss_jacobi_rule: need N >= 1");
    const double a = p.alpha, b = p.beta;
    const double apb = a + b;

    // Recurrence coefficients of the monic Jacobi family.
    std::vector<double> diag(n_nodes), off;
    diag[0] = (b - a) / (apb + 2);
    for (int k = 1; k < n_nodes; ++k) {
        diag[k] = (b * b - a * a) / ((2 * k + apb) * (2 * k + apb + 2));
        double bk;
        if (k == 1)
            bk = 4 * (1 + a) * (1 + b) / ((2 + apb) * (2 + apb) * (3 + apb));
        else
            bk = 4.0 * k * (k + a) * (k + b) * (k + apb) /
                 ((2 * k + apb) * (2 * k + apb) * (2 * k + apb + 1) * (2 * k + apb - 1));
        off.push_back(std::sqrt(bk));
    }

    std::vector<double> z(n_nodes, 0.0);
    z[0] = 1.0;
    tridiag_ql(diag, off, z);

    std::vector<int> order(n_nodes);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return diag[i] < diag[j]; });

    const double mass = jacobi_weight_mass(p);
    QuadratureRule rule;
    rule.dim = 1;
    rule.domain = DomainTag::interval;
    rule.exactness_degree = 2 * n_nodes - 1;
    rule.nodes.resize(n_nodes);
    rule.weights.resize(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        rule.nodes[i] = diag[order[i]];
        rule.weights[i] = mass * z[order[i]] * z[order[i]];
    }
    return rule;
}

QuadratureRule product_rule_cube(int n_per_axis, const std::vector<JacobiParams>& params) {
    if (params.empty()) throw std::invalid_argument("product_rule_cube: need m >= 1");
    const int m = (int)params.size();
    std::vector<QuadratureRule> axes;
    axes.reserve(m);
    for (const auto& p : params) axes.push_back(gauss_jacobi_rule(n_per_axis, p));

    QuadratureRule rule;
    rule.dim = m;
    rule.domain = DomainTag::cube;
    rule.exactness_degree = 2 * n_per_axis - 1;

    std::size_t total = 1;
    for (const auto& ax : axes) total *= ax.size();
    rule.nodes.resize(total * m);
    rule.weights.assign(total, 1.0);

    // Odometer over the per-axis rules, last axis fastest.
    std::vector<std::size_t> idx(m, 0);
    for (std::size_t i = 0; i < total; ++i) {
        for (int j = 0; j < m; ++j) {
            rule.nodes[i * m + j] = axes[j].nodes[idx[j]];
            rule.weights[i] *= axes[j].weights[idx[j]];
        }
        for (int j = m - 1; j >= 0; --j) {
            if (++idx[j] < axes[j].size()) break;
            idx[j] = 0;
        }
    }
    return rule;
}

QuadratureRule ball_rule(int d, double mu, int degree) {
    if (mu < 0.0) throw std::invalid_argument("ball_rule: mu must be >= 0");
    if (degree < 0) degree = 0;
    if (d == 1) {
        const int n_nodes = degree / 2 + 1;
        QuadratureRule rule = gauss_jacobi_rule(n_nodes, {mu - 0.5, mu - 0.5});
        rule.domain = DomainTag::ball1;
        return rule;
    }
    if (d != 2) throw std::invalid_argument("ball_rule: d must be 1 or 2");

    // Substitution y = r (cos t, sin t), u = 2 r^2 - 1:
    //   int_{B^2} f (1-|y|^2)^{mu-1/2} dy
    //     = 1/4 int_{-1}^{1} (1-u)^{mu-1/2} 2^{-(mu-1/2)} int_0^{2pi} f dt du.
    const int n_radial = degree / 2 + 1;
    QuadratureRule radial = gauss_jacobi_rule(n_radial, {mu - 0.5, 0.0});
    const double radial_scale = 0.25 * std::pow(2.0, -(mu - 0.5));
    const int n_angles = std::max(degree + 1, 4);
    const double ang_w = 2.0 * M_PI / n_angles;

    QuadratureRule rule;
    rule.dim = 2;
    rule.domain = DomainTag::ball2;
    rule.exactness_degree = degree;
    rule.nodes.reserve(2 * radial.size() * n_angles);
    rule.weights.reserve(radial.size() * n_angles);
    for (std::size_t i = 0; i < radial.size(); ++i) {
        const double r = std::sqrt(0.5 * (1.0 + radial.nodes[i]));
        const double w = radial.weights[i] * radial_scale * ang_w;
        for (int k = 0; k < n_angles; ++k) {
            const double t = 2.0 * M_PI * k / n_angles;
            rule.nodes.push_back(r * std::cos(t));
            rule.nodes.push_back(r * std::sin(t));
            rule.weights.push_back(w);
        }
    }
    return rule;
}

QuadratureRule cylinder_rule(const CylinderSpace& space, int degree) {
    std::vector<JacobiParams> params;
    for (int i = 0; i < space.m; ++i) params.push_back(space.axis_params(i));
    QuadratureRule cube = product_rule_cube(degree / 2 + 1, params);
    QuadratureRule ball = ball_rule(space.d, space.mu, degree);

    QuadratureRule rule;
    rule.dim = space.m + space.d;
    rule.domain = DomainTag::cylinder;
    rule.exactness_degree = std::min(cube.exactness_degree, ball.exactness_degree);
    const std::size_t total = cube.size() * ball.size();
    rule.nodes.resize(total * rule.dim);
    rule.weights.resize(total);
    std::size_t out = 0;
    for (std::size_t i = 0; i < cube.size(); ++i)
        for (std::size_t j = 0; j < ball.size(); ++j) {
            double* n = rule.nodes.data() + out * rule.dim;
            std::copy(cube.node(i), cube.node(i) + space.m, n);
            std::copy(ball.node(j), ball.node(j) + space.d, n + space.m);
            rule.weights[out] = cube.weights[i] * ball.weights[j];
            ++out;
        }
    return rule;
}

double integrate(const std::function<double(const double*)>& f, const QuadratureRule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double v = f(rule.node(i));
        if (!std::isfinite(v))
            throw std::runtime_error("integrate: integrand produced a non-finite value");
        sum += rule.weights[i] * v;
    }
    return sum;
}

}  // namespace cylsum
