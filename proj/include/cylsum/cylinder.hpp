#ifndef CYLSUM_CYLINDER_HPP
#define CYLSUM_CYLINDER_HPP

#include <functional>
#include <vector>

#include "cylsum/ballbasis.hpp"
#include "cylsum/quadrature.hpp"
#include "cylsum/space.hpp"

namespace cylsum {

/// Addresses one orthonormal product basis element: cube multi-index gamma
/// times a ball basis element.  Total degree is |gamma| + ball.n.
struct BasisIndex {
    std::vector<int> gamma;
    BallBasisElement ball;

    int cube_degree() const;
    int total_degree() const { return cube_degree() + ball.n; }
};

/// Coefficients of a function against the orthonormal cylinder basis up to
/// total degree max_degree, in enumeration order.
struct ExpansionCoeffs {
    CylinderSpace space;
    int max_degree;
    std::vector<BasisIndex> basis;
    std::vector<double> coeffs;
};

/// All basis indices of total degree <= n, ordered by total degree, then
/// cube degree, then lexicographic gamma, then ball index.
std::vector<BasisIndex> enumerate_basis(const CylinderSpace& space, int n);

/// Value of one product basis element at (x, y).
double eval_basis(const CylinderSpace& space, const BasisIndex& idx,
                  const double* x, const double* y);

/// Values of every listed basis element at one point, sharing the per-axis
/// recurrence arrays (and the d=1 ball array) across elements.
std::vector<double> eval_basis_all(const CylinderSpace& space,
                                   const std::vector<BasisIndex>& basis, int n,
                                   const double* x, const double* y);

/// Degree slices of the cube kernel only: entry j is
/// sum_{|gamma|=j} P_gamma(x) P_gamma(x'), j = 0..n.
std::vector<double> cube_kernel_slices(const CylinderSpace& space, int n,
                                       const double* x, const double* xp);

/// Degree slices of the reproducing kernel: slice k is the sum over basis
/// elements of total degree exactly k, so K_n = sum of slices 0..n.
/// Cube factors come from orthonormal Jacobi sums, ball factors from the
/// compact kernel formula.
std::vector<double> kernel_slices(const CylinderSpace& space, int n,
                                  const double* x, const double* xp,
                                  const double* y, const double* yp);

/// Reproducing kernel K_n(x, x', y, y').
double kernel(const CylinderSpace& space, int n,
              const double* x, const double* xp,
              const double* y, const double* yp);

/// Cesaro kernel K_n^delta = sum_k c_{n,k}^delta * slice_k.
double cesaro_kernel(const CylinderSpace& space, const CesaroCoeffs& plan,
                     const double* x, const double* xp,
                     const double* y, const double* yp);

using CylinderFn = std::function<double(const double* x, const double* y)>;

/// Expansion coefficients <f, e_idx> by cylinder quadrature of the stated
/// exactness degree.
ExpansionCoeffs expand(const CylinderSpace& space, int n, const CylinderFn& f,
                       int rule_degree);

/// Partial sum S_n f at (x', y'), accumulated slice by slice in
/// enumeration order.
double partial_sum_eval(const ExpansionCoeffs& coeffs, int n,
                        const double* xp, const double* yp);

/// Cesaro mean S_n^delta f at (x', y').  With delta = 0 this reproduces
/// partial_sum_eval bitwise (identical accumulation order).
double cesaro_sum_eval(const ExpansionCoeffs& coeffs, const CesaroCoeffs& plan,
                       const double* xp, const double* yp);

/// Oracle path: S_n^delta f(x', y') as the quadrature integral of
/// f * K_n^delta * w.  Retained as a cross-check for cesaro_sum_eval.
double cesaro_sum_by_kernel(const CylinderSpace& space, int n, double delta,
                            const CylinderFn& f, int rule_degree,
                            const double* xp, const double* yp);

}  // namespace cylsum

#endif
