#include "cylsum/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace cylsum {

JacobiParams::JacobiParams(double a, double b) : alpha(a), beta(b) {
    if (!(a > -1.0) || !(b > -1.0))
        throw std::invalid_argument("JacobiParams: alpha and beta must exceed -1");
}

double pochhammer(double a, int j) {
    if (j < 0) throw std::invalid_argument("pochhammer: j must be nonnegative");
    double prod = 1.0;
    for (int k = 1; k <= j; ++k) prod *= a + k - 1;
    return prod;
}

double cesaro_coeff(int n, int j, double delta) {
    if (j < 0 || j > n) throw std::invalid_argument("cesaro_coeff: need 0 <= j <= n");
    if (delta < 0.0) throw std::invalid_argument("cesaro_coeff: delta must be >= 0");
    // Ratio of products accumulated factor by factor; every factor of the
    // denominator is nonzero for delta >= 0, j <= n.
    double r = 1.0;
    for (int k = 1; k <= j; ++k) r *= (-n + k - 1) / (-n - delta + k - 1);
    return r;
}

CesaroCoeffs::CesaroCoeffs(int nn, double d) : n(nn), delta(d), coeffs(nn + 1) {
    if (nn < 0) throw std::invalid_argument("CesaroCoeffs: n must be nonnegative");
    for (int j = 0; j <= nn; ++j) coeffs[j] = cesaro_coeff(nn, j, d);
}

std::vector<double> eval_jacobi_all(int n, const JacobiParams& p, double x) {
    const double a = p.alpha, b = p.beta;
    std::vector<double> v(n + 1);
    v[0] = 1.0;
    if (n == 0) return v;
    v[1] = 0.5 * (a + b + 2) * x + 0.5 * (a - b);
    for (int k = 2; k <= n; ++k) {
        const double apb = a + b;
        const double c1 = 2.0 * k * (k + apb) * (2 * k + apb - 2);
        const double c2 = (2 * k + apb - 1) * (a * a - b * b);
        const double c3 = (2 * k + apb - 1) * (2 * k + apb) * (2 * k + apb - 2);
        const double c4 = 2.0 * (k + a - 1) * (k + b - 1) * (2 * k + apb);
        v[k] = ((c2 + c3 * x) * v[k - 1] - c4 * v[k - 2]) / c1;
    }
    return v;
}

double eval_jacobi(int n, const JacobiParams& p, double x) {
    return eval_jacobi_all(n, p, x)[n];
}

double jacobi_norm_const(int n, const JacobiParams& p) {
    const double a = p.alpha, b = p.beta;
    if (n == 0) {
        // Beta-function form; the general expression below is 0/0 at a+b = -1.
        return std::pow(2.0, a + b + 1) *
               std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
    }
    const double lg = std::lgamma(n + a + 1) + std::lgamma(n + b + 1) -
                      std::lgamma(n + 1.0) - std::lgamma(n + a + b + 1);
    return std::pow(2.0, a + b + 1) / (2 * n + a + b + 1) * std::exp(lg);
}

double jacobi_weight_mass(const JacobiParams& p) {
    return jacobi_norm_const(0, p);
}

double eval_orthonormal_jacobi(int n, const JacobiParams& p, double x) {
    return eval_jacobi(n, p, x) / std::sqrt(jacobi_norm_const(n, p));
}

std::vector<double> eval_orthonormal_jacobi_all(int n, const JacobiParams& p, double x) {
    std::vector<double> v = eval_jacobi_all(n, p, x);
    for (int k = 0; k <= n; ++k) v[k] /= std::sqrt(jacobi_norm_const(k, p));
    return v;
}

std::vector<double> eval_gegenbauer_all(int n, double lambda, double x) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("eval_gegenbauer: lambda must be positive");
    std::vector<double> v(n + 1);
    v[0] = 1.0;
    if (n == 0) return v;
    v[1] = 2.0 * lambda * x;
    for (int k = 2; k <= n; ++k)
        v[k] = (2.0 * (k + lambda - 1) * x * v[k - 1] - (k + 2 * lambda - 2) * v[k - 2]) / k;
    return v;
}

double eval_gegenbauer(int n, double lambda, double x) {
    return eval_gegenbauer_all(n, lambda, x)[n];
}

double gegenbauer_mean_square(int n, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("gegenbauer_mean_square: lambda must be positive");
    // lambda (2 lambda)_n / (n! (n+lambda)), via log-Gamma for large n.
    const double lg = std::lgamma(n + 2 * lambda) - std::lgamma(2 * lambda) -
                      std::lgamma(n + 1.0);
    return lambda / (n + lambda) * std::exp(lg);
}

double eval_normalized_gegenbauer(int n, double lambda, double x) {
    return eval_gegenbauer(n, lambda, x) / std::sqrt(gegenbauer_mean_square(n, lambda));
}

long long dim_poly_space(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("dim_poly_space: need n >= 0, d >= 1");
    long long r = 1;
    for (int k = 1; k <= d - 1; ++k) r = r * (n + k) / k;
    return r;
}

double binomial_real(double a, int k) {
    if (k < 0) throw std::invalid_argument("binomial_real: k must be nonnegative");
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= (a - k + i) / i;
    return r;
}

}  // namespace cylsum
