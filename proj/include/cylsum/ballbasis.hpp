#ifndef CYLSUM_BALLBASIS_HPP
#define CYLSUM_BALLBASIS_HPP

#include <vector>

#include "cylsum/orthopoly.hpp"

namespace cylsum {

/// One orthonormal basis element on B^d of total degree n.  For d=2 the
/// element is radial index j (0 <= 2j <= n) times a circular harmonic of
/// degree n-2j; when n-2j = 0 only the constant harmonic (tag 2) exists.
/// For d=1 the element is the single orthonormal polynomial of degree n
/// (j and harmonic_tag are 0).
struct BallBasisElement {
    int d;
    double mu;
    int n;
    int j = 0;
    int harmonic_tag = 0;

    void validate() const;
};

/// Circular harmonics: tag 1 -> sin(n(pi/2 - theta))/sqrt(pi),
/// tag 2 -> cos(n(pi/2 - theta))/sqrt(pi).
double eval_spherical_harmonic(int tag, int n, double theta);

/// Orthonormal Chebyshev values on [-1,1]: 1/sqrt(pi) for n = 0 and
/// sqrt(2/pi) T_n(y) for n >= 1 (the d=1, mu=0 ball basis).
double eval_cheb_basis(int n, double y);

/// Orthonormal d=1 ball basis for general mu >= 0 (orthonormal Jacobi with
/// alpha = beta = mu - 1/2).
double eval_ball1_basis(int n, double mu, double y);

/// Orthonormal basis element on the disk for mu = 1/2:
///   scale * phat_j^{(0, n-2j)}(2|y|^2 - 1) * r^{n-2j} * S_{tag, n-2j}(theta).
/// The scale makes each element exactly unit norm (2^{(n-2j)/2 + 1} for
/// n-2j >= 1, sqrt(2) for the constant harmonic).
double eval_disk_basis(const BallBasisElement& elem, double y1, double y2);

/// Value of a ball basis element at y (y has elem.d coordinates).
double eval_ball_basis(const BallBasisElement& elem, const double* y);

/// All elements of total degree exactly n, in deterministic order
/// (d=2: ascending j, tag 1 before tag 2).
std::vector<BallBasisElement> enumerate_ball_basis(int d, double mu, int n);

/// Degree-n kernel as the explicit sum over the orthonormal basis.
/// Supported: d=1 (any mu >= 0) and (d=2, mu=1/2).
double ball_kernel_direct(int n, int d, double mu, const double* y, const double* yp);

/// Degree-n kernel through the closed Gegenbauer form: a Gauss rule in t
/// with weight (1-t^2)^{mu-1} for mu > 0, the two-point Gegenbauer formula
/// for mu = 0, d >= 2, and the Chebyshev product decomposition for
/// d = 1, mu = 0.
double ball_kernel_compact(int n, int d, double mu, const double* y, const double* yp);

/// Kernels of all degrees 0..n_max in one pass (shared recurrence arrays).
std::vector<double> ball_kernel_compact_all(int n_max, int d, double mu,
                                            const double* y, const double* yp);

}  // namespace cylsum

#endif
