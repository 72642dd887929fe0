#include "cylsum/ballbasis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cylsum/quadrature.hpp"
#include "cylsum/space.hpp"

namespace cylsum {

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Chebyshev T_0..T_n at x.
std::vector<double> cheb_all(int n, double x) {
    std::vector<double> v(n + 1);
    v[0] = 1.0;
    if (n >= 1) v[1] = x;
    for (int k = 2; k <= n; ++k) v[k] = 2.0 * x * v[k - 1] - v[k - 2];
    return v;
}

}  // namespace

void BallBasisElement::validate() const {
    if (n < 0) throw std::invalid_argument("BallBasisElement: n must be >= 0");
    if (d == 1) {
        if (mu < 0.0) throw std::invalid_argument("BallBasisElement: mu must be >= 0");
        return;
    }
    if (d == 2) {
        if (mu != 0.5)
            throw std::invalid_argument("BallBasisElement: only mu = 1/2 has an explicit d=2 basis");
        if (j < 0 || 2 * j > n)
            throw std::invalid_argument("BallBasisElement: need 0 <= 2j <= n");
        if (harmonic_tag != 1 && harmonic_tag != 2)
            throw std::invalid_argument("BallBasisElement: harmonic_tag must be 1 or 2");
        if (n - 2 * j == 0 && harmonic_tag != 2)
            throw std::invalid_argument("BallBasisElement: degree-0 harmonic admits only tag 2");
        return;
    }
    throw std::invalid_argument("BallBasisElement: d must be 1 or 2");
}

double eval_spherical_harmonic(int tag, int n, double theta) {
    const double phase = n * (M_PI / 2.0 - theta);
    if (tag == 1) return std::sin(phase) / std::sqrt(M_PI);
    if (tag == 2) return std::cos(phase) / std::sqrt(M_PI);
    throw std::invalid_argument("eval_spherical_harmonic: tag must be 1 or 2");
}

double eval_cheb_basis(int n, double y) {
    if (n == 0) return 1.0 / std::sqrt(M_PI);
    return std::sqrt(2.0 / M_PI) * cheb_all(n, y)[n];
}

double eval_ball1_basis(int n, double mu, double y) {
    if (mu < 0.0) throw std::invalid_argument("eval_ball1_basis: mu must be >= 0");
    return eval_orthonormal_jacobi(n, {mu - 0.5, mu - 0.5}, y);
}

double eval_disk_basis(const BallBasisElement& elem, double y1, double y2) {
    if (elem.d != 2) throw std::invalid_argument("eval_disk_basis: element must have d = 2");
    elem.validate();
    const int k = elem.n - 2 * elem.j;
    const double r2 = y1 * y1 + y2 * y2;
    const double radial = eval_orthonormal_jacobi(elem.j, {0.0, (double)k}, 2.0 * r2 - 1.0);
    const double scale = (k == 0) ? std::sqrt(2.0) : std::pow(2.0, 0.5 * k + 1.0);
    if (k == 0) return scale * radial / std::sqrt(M_PI);
    const double theta = std::atan2(y2, y1);
    return scale * radial * std::pow(std::sqrt(r2), k) *
           eval_spherical_harmonic(elem.harmonic_tag, k, theta);
}

double eval_ball_basis(const BallBasisElement& elem, const double* y) {
    if (elem.d == 1) return eval_ball1_basis(elem.n, elem.mu, y[0]);
    return eval_disk_basis(elem, y[0], y[1]);
}

std::vector<BallBasisElement> enumerate_ball_basis(int d, double mu, int n) {
    std::vector<BallBasisElement> out;
    if (d == 1) {
        out.push_back({1, mu, n, 0, 0});
        return out;
    }
    if (d != 2 || mu != 0.5)
        throw std::invalid_argument("enumerate_ball_basis: supported are d=1 and (d=2, mu=1/2)");
    for (int j = 0; 2 * j <= n; ++j) {
        const int k = n - 2 * j;
        if (k == 0) {
            out.push_back({2, mu, n, j, 2});
        } else {
            out.push_back({2, mu, n, j, 1});
            out.push_back({2, mu, n, j, 2});
        }
    }
    return out;
}

double ball_kernel_direct(int n, int d, double mu, const double* y, const double* yp) {
    if (d == 1)
        return eval_ball1_basis(n, mu, y[0]) * eval_ball1_basis(n, mu, yp[0]);
    double sum = 0.0;
    for (const auto& elem : enumerate_ball_basis(d, mu, n))
        sum += eval_disk_basis(elem, y[0], y[1]) * eval_disk_basis(elem, yp[0], yp[1]);
    return sum;
}

std::vector<double> ball_kernel_compact_all(int n_max, int d, double mu,
                                            const double* y, const double* yp) {
    if (n_max < 0) throw std::invalid_argument("ball_kernel_compact_all: n_max must be >= 0");
    if (d != 1 && d != 2) throw std::invalid_argument("ball_kernel_compact_all: d must be 1 or 2");
    if (mu < 0.0) throw std::invalid_argument("ball_kernel_compact_all: mu must be >= 0");

    double dot = 0.0, ny2 = 0.0, npy2 = 0.0;
    for (int i = 0; i < d; ++i) {
        dot += y[i] * yp[i];
        ny2 += y[i] * y[i];
        npy2 += yp[i] * yp[i];
    }
    const double tail = std::sqrt(std::max(0.0, 1.0 - ny2)) *
                        std::sqrt(std::max(0.0, 1.0 - npy2));
    const double mass = ball_weight_mass(d, mu);
    std::vector<double> out(n_max + 1);

    if (mu == 0.0 && d == 1) {
        // T_n(y) T_n(y') = (T_n(a+) + T_n(a-)) / 2 with a± = yy' ± tails.
        const auto tp = cheb_all(n_max, clamp_unit(dot + tail));
        const auto tm = cheb_all(n_max, clamp_unit(dot - tail));
        out[0] = 1.0 / M_PI;
        for (int k = 1; k <= n_max; ++k) out[k] = (tp[k] + tm[k]) / M_PI;
        return out;
    }

    if (mu == 0.0) {
        const double lambda = 0.5 * (d - 1);
        const auto cp = eval_gegenbauer_all(n_max, lambda, clamp_unit(dot + tail));
        const auto cm = eval_gegenbauer_all(n_max, lambda, clamp_unit(dot - tail));
        for (int k = 0; k <= n_max; ++k)
            out[k] = (k + lambda) / lambda * 0.5 * (cp[k] + cm[k]) / mass;
        return out;
    }

    // mu > 0: one-dimensional Gegenbauer integral with normalized weight
    // c_mu (1-t^2)^{mu-1}, c_mu = Gamma(mu+1/2) / (sqrt(pi) Gamma(mu)).
    const double lambda = mu + 0.5 * (d - 1);
    const int n_t = (n_max + 1 + 1) / 2 + 2;
    const QuadratureRule t_rule = gauss_jacobi_rule(n_t, {mu - 1.0, mu - 1.0});
    const double c_mu = std::exp(std::lgamma(mu + 0.5) - std::lgamma(mu)) / std::sqrt(M_PI);
    std::vector<double> acc(n_max + 1, 0.0);
    for (std::size_t i = 0; i < t_rule.size(); ++i) {
        const double arg = clamp_unit(dot + t_rule.nodes[i] * tail);
        const auto c = eval_gegenbauer_all(n_max, lambda, arg);
        for (int k = 0; k <= n_max; ++k) acc[k] += t_rule.weights[i] * c[k];
    }
    for (int k = 0; k <= n_max; ++k)
        out[k] = (k + lambda) / lambda * c_mu * acc[k] / mass;
    return out;
}

double ball_kernel_compact(int n, int d, double mu, const double* y, const double* yp) {
    return ball_kernel_compact_all(n, d, mu, y, yp)[n];
}

}  // namespace cylsum
