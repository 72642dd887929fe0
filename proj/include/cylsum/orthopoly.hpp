#ifndef CYLSUM_ORTHOPOLY_HPP
#define CYLSUM_ORTHOPOLY_HPP

#include <vector>

namespace cylsum {

/// Parameters (alpha, beta) of a Jacobi weight (1-x)^alpha (1+x)^beta.
/// Both exponents must exceed -1 for the weight to be integrable.
struct JacobiParams {
    double alpha;
    double beta;

    JacobiParams(double a, double b);
};

/// Rising factorial: prod_{k=1}^{j} (a+k-1). Empty product is 1.
double pochhammer(double a, int j);

/// Cesaro coefficient c_{n,j}^delta = (-n)_j / (-n-delta)_j.
/// Requires 0 <= j <= n and delta >= 0.
double cesaro_coeff(int n, int j, double delta);

/// Precomputed Cesaro coefficients c_{n,0}^delta .. c_{n,n}^delta.
struct CesaroCoeffs {
    int n;
    double delta;
    std::vector<double> coeffs;

    CesaroCoeffs(int n, double delta);
};

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by three-term recurrence.
double eval_jacobi(int n, const JacobiParams& p, double x);

/// All values P_0(x), ..., P_n(x) in one recurrence pass.
std::vector<double> eval_jacobi_all(int n, const JacobiParams& p, double x);

/// Squared L^2 norm of P_n^{(alpha,beta)} against its weight on [-1,1].
/// Computed through log-Gamma differences.
double jacobi_norm_const(int n, const JacobiParams& p);

/// Total mass of the Jacobi weight on [-1,1]: 2^{a+b+1} B(a+1, b+1).
double jacobi_weight_mass(const JacobiParams& p);

/// Orthonormal Jacobi polynomial value.
double eval_orthonormal_jacobi(int n, const JacobiParams& p, double x);

/// All orthonormal values of degree 0..n at x.
std::vector<double> eval_orthonormal_jacobi_all(int n, const JacobiParams& p, double x);

/// Gegenbauer polynomial C_n^lambda(x), lambda > 0.
double eval_gegenbauer(int n, double lambda, double x);

/// All values C_0^lambda(x), ..., C_n^lambda(x).
std::vector<double> eval_gegenbauer_all(int n, double lambda, double x);

/// Mean square of C_n^lambda against the probability measure proportional
/// to (1-x^2)^{lambda-1/2}; equals lambda (2 lambda)_n / (n! (n+lambda)).
double gegenbauer_mean_square(int n, double lambda);

/// C_n^lambda(x) / sqrt(gegenbauer_mean_square(n, lambda)).  With this
/// scaling ((n+lambda)/lambda) C_n^lambda(x) = Ct_n(1) Ct_n(x).
double eval_normalized_gegenbauer(int n, double lambda, double x);

/// Dimension of the space of polynomials of total degree exactly n in d
/// variables restricted to the ball or cube: binomial(n+d-1, n).
long long dim_poly_space(int n, int d);

/// binomial(a, k) for real a, integer k >= 0.
double binomial_real(double a, int k);

}  // namespace cylsum

#endif
