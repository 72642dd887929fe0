#include "cylsum/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cylsum {

namespace {

// Multi-indices gamma with |gamma| = total in m variables, lexicographic.
void multi_indices_rec(int m, int total, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == m - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int g = 0; g <= total; ++g) {
        cur.push_back(g);
        multi_indices_rec(m, total - g, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multi_indices(int m, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multi_indices_rec(m, total, cur, out);
    return out;
}

}  // namespace

// Built by convolving the per-axis orthonormal product arrays.
std::vector<double> cube_kernel_slices(const CylinderSpace& space, int n,
                                       const double* x, const double* xp) {
    std::vector<double> conv{1.0};
    for (int i = 0; i < space.m; ++i) {
        const JacobiParams p = space.axis_params(i);
        const auto a = eval_orthonormal_jacobi_all(n, p, x[i]);
        const auto b = eval_orthonormal_jacobi_all(n, p, xp[i]);
        std::vector<double> axis(n + 1);
        for (int g = 0; g <= n; ++g) axis[g] = a[g] * b[g];
        std::vector<double> next(n + 1, 0.0);
        const int clen = (int)conv.size();
        for (int j = 0; j <= n; ++j)
            for (int g = std::max(0, j - clen + 1); g <= j; ++g)
                next[j] += conv[j - g] * axis[g];
        conv = std::move(next);
    }
    conv.resize(n + 1, 0.0);
    return conv;
}

int BasisIndex::cube_degree() const {
    return std::accumulate(gamma.begin(), gamma.end(), 0);
}

std::vector<BasisIndex> enumerate_basis(const CylinderSpace& space, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_basis: n must be >= 0");
    std::vector<BasisIndex> out;
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) {
            const auto gammas = multi_indices(space.m, j);
            const auto balls = enumerate_ball_basis(space.d, space.mu, k - j);
            for (const auto& g : gammas)
                for (const auto& bb : balls) out.push_back({g, bb});
        }
    return out;
}

double eval_basis(const CylinderSpace& space, const BasisIndex& idx,
                  const double* x, const double* y) {
    double v = eval_ball_basis(idx.ball, y);
    for (int i = 0; i < space.m; ++i)
        v *= eval_orthonormal_jacobi(idx.gamma[i], space.axis_params(i), x[i]);
    return v;
}

std::vector<double> eval_basis_all(const CylinderSpace& space,
                                   const std::vector<BasisIndex>& basis, int n,
                                   const double* x, const double* y) {
    std::vector<std::vector<double>> axis(space.m);
    for (int i = 0; i < space.m; ++i)
        axis[i] = eval_orthonormal_jacobi_all(n, space.axis_params(i), x[i]);
    std::vector<double> ball1;
    if (space.d == 1)
        ball1 = eval_orthonormal_jacobi_all(n, {space.mu - 0.5, space.mu - 0.5}, y[0]);
    std::vector<double> out(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
        double v = (space.d == 1) ? ball1[basis[t].ball.n]
                                  : eval_disk_basis(basis[t].ball, y[0], y[1]);
        for (int i = 0; i < space.m; ++i) v *= axis[i][basis[t].gamma[i]];
        out[t] = v;
    }
    return out;
}

std::vector<double> kernel_slices(const CylinderSpace& space, int n,
                                  const double* x, const double* xp,
                                  const double* y, const double* yp) {
    const auto cube = cube_kernel_slices(space, n, x, xp);
    const auto ball = ball_kernel_compact_all(n, space.d, space.mu, y, yp);
    std::vector<double> slices(n + 1, 0.0);
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j) slices[k] += cube[j] * ball[k - j];
    return slices;
}

double kernel(const CylinderSpace& space, int n,
              const double* x, const double* xp,
              const double* y, const double* yp) {
    const auto slices = kernel_slices(space, n, x, xp, y, yp);
    double sum = 0.0;
    for (double s : slices) sum += s;
    return sum;
}

double cesaro_kernel(const CylinderSpace& space, const CesaroCoeffs& plan,
                     const double* x, const double* xp,
                     const double* y, const double* yp) {
    const auto slices = kernel_slices(space, plan.n, x, xp, y, yp);
    double sum = 0.0;
    for (int k = 0; k <= plan.n; ++k) sum += plan.coeffs[k] * slices[k];
    return sum;
}

ExpansionCoeffs expand(const CylinderSpace& space, int n, const CylinderFn& f,
                       int rule_degree) {
    if (rule_degree < 2 * n)
        throw std::invalid_argument("expand: rule_degree must be at least 2n");
    ExpansionCoeffs ec{space, n, enumerate_basis(space, n),
                       std::vector<double>(0)};
    ec.coeffs.assign(ec.basis.size(), 0.0);

    const QuadratureRule rule = cylinder_rule(space, rule_degree);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const double* node = rule.node(q);
        const double* xq = node;
        const double* yq = node + space.m;
        const double fv = f(xq, yq);
        if (!std::isfinite(fv))
            throw std::runtime_error("expand: function produced a non-finite value");
        const double wf = rule.weights[q] * fv;
        const auto vals = eval_basis_all(space, ec.basis, n, xq, yq);
        for (std::size_t t = 0; t < ec.basis.size(); ++t)
            ec.coeffs[t] += wf * vals[t];
    }
    return ec;
}

namespace {

// Shared accumulation: slice sums in enumeration order, then the weighted
// slice combination.  Passing all-ones weights reproduces the partial sum
// bitwise.
double weighted_slice_sum(const ExpansionCoeffs& coeffs, int n,
                          const double* slice_weights,
                          const double* xp, const double* yp) {
    if (n > coeffs.max_degree)
        throw std::invalid_argument("cesaro_sum_eval: plan degree exceeds the coefficient table");
    std::vector<double> slice_sum(n + 1, 0.0);
    const auto vals = eval_basis_all(coeffs.space, coeffs.basis,
                                     coeffs.max_degree, xp, yp);
    for (std::size_t t = 0; t < coeffs.basis.size(); ++t) {
        const int k = coeffs.basis[t].total_degree();
        if (k > n) continue;
        slice_sum[k] += coeffs.coeffs[t] * vals[t];
    }
    double total = 0.0;
    for (int k = 0; k <= n; ++k) total += slice_weights[k] * slice_sum[k];
    return total;
}

}  // namespace

double partial_sum_eval(const ExpansionCoeffs& coeffs, int n,
                        const double* xp, const double* yp) {
    const std::vector<double> ones(n + 1, 1.0);
    return weighted_slice_sum(coeffs, n, ones.data(), xp, yp);
}

double cesaro_sum_eval(const ExpansionCoeffs& coeffs, const CesaroCoeffs& plan,
                       const double* xp, const double* yp) {
    return weighted_slice_sum(coeffs, plan.n, plan.coeffs.data(), xp, yp);
}

double cesaro_sum_by_kernel(const CylinderSpace& space, int n, double delta,
                            const CylinderFn& f, int rule_degree,
                            const double* xp, const double* yp) {
    const CesaroCoeffs plan(n, delta);
    const QuadratureRule rule = cylinder_rule(space, rule_degree);
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const double* node = rule.node(q);
        const double* xq = node;
        const double* yq = node + space.m;
        const double v = f(xq, yq) * cesaro_kernel(space, plan, xq, xp, yq, yp);
        if (!std::isfinite(v))
            throw std::runtime_error("cesaro_sum_by_kernel: non-finite integrand value");
        sum += rule.weights[q] * v;
    }
    return sum;
}

}  // namespace cylsum
