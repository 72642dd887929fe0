#ifndef CYLSUM_ANALYSIS_HPP
#define CYLSUM_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "cylsum/cylinder.hpp"

namespace cylsum {

/// Critical-index bound: the summation order above which (C,delta) means
/// converge.  bound = first_term + second_term.
struct CriticalIndexReport {
    double first_term;   // sum max(alpha_i, beta_i) + mu + (d+m-1)/2
    double second_term;  // max(0, -sum min(alpha_i, beta_i) - mu - (d+m+1)/2)
    double bound;
    bool hypothesis_ok;  // alpha_i + beta_i >= -1 on every axis
};

CriticalIndexReport critical_delta(const CylinderSpace& space);

/// A quadrature estimate together with its node-doubling diagnostic.
struct LebesgueEstimate {
    int n = 0;
    double delta = 0.0;
    double value = 0.0;
    double refinement = 0.0;   // relative change under one node doubling
    bool reliable = true;      // refinement <= 5%
    std::vector<double> argmax_y;  // filled by lebesgue_sup
};

/// int int |K_n^delta(x, x', y, y')| w dx dy by oversampled quadrature
/// (exactness degree 4n+16, doubled refinement_level times; the reported
/// refinement compares the last two levels).  Default evaluation point is
/// x' = e = (1,...,1).
LebesgueEstimate lebesgue_quantity(const CylinderSpace& space, int n, double delta,
                                   const std::vector<double>& xp,
                                   const std::vector<double>& yp,
                                   int refinement_level = 1);

LebesgueEstimate lebesgue_quantity_at_corner(const CylinderSpace& space, int n,
                                             double delta,
                                             const std::vector<double>& yp,
                                             int refinement_level = 1);

/// Max of lebesgue_quantity over y' in the grid, x' = e.  Grid points are
/// flat, d coordinates each.
LebesgueEstimate lebesgue_sup(const CylinderSpace& space, int n, double delta,
                              const std::vector<double>& grid,
                              int refinement_level = 1);

/// Chebyshev-extrema evaluation grid mapped into the ball; d=1 takes
/// n_points on [-1,1], d=2 takes radii x angles.
std::vector<double> ball_grid(int d, int n_radii, int n_angles);

/// D_lambda(v, p, u): the weight-ratio function of the kernel majorant,
/// zero outside the region 1 - v^2 - p^2 - u^2 + 2upv >= 0.
double dlambda(double lambda, double v, double p, double u);

/// (estimate, exact) for int_{-1}^1 D_lambda(u, v, p) (1-p^2)^lambda dp
/// against the closed form 2^{2 lambda} B(lambda+1/2, lambda+1/2).  The
/// quadrature uses node_count Gauss-Legendre points on the support interval.
std::pair<double, double> dlambda_identity_check(double lambda, double v, double u,
                                                 int node_count);

/// Both sides of the kernel-majorant inequality at one (x, y') pair:
/// lhs is the ball integral of |K_n^delta(x, e, y, y')| w_mu(y), rhs the
/// one-dimensional Gegenbauer-sum integral that dominates it.
struct MajorantProbe {
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_refinement = 0.0;
    double rhs_refinement = 0.0;
    bool reliable = true;
};

MajorantProbe majorant_probe(const CylinderSpace& space, int n, double delta,
                             const std::vector<double>& x,
                             const std::vector<double>& yp,
                             int refinement_level = 1);

/// Weighted L^p error of the (C,delta) mean against f: p = 1 or 2 uses a
/// cylinder quadrature of the given exactness degree, p = 0 means the sup
/// over the tensor grid (cube_grid points per cube axis times ball_grid).
double error_norm(const ExpansionCoeffs& coeffs, const CesaroCoeffs& plan,
                  const CylinderFn& f, int p, int rule_degree,
                  int cube_grid_points, const std::vector<double>& ball_grid_pts);

struct ConvergenceRow {
    double delta;
    int n;
    double l1;
    double l2;
    double sup;
    double lebesgue;
    double lebesgue_refinement;
    bool reliable;
};

/// Error and Lebesgue-quantity table over (delta, n), rows ordered by
/// delta then n.
std::vector<ConvergenceRow> convergence_experiment(
    const CylinderSpace& space, const CylinderFn& f,
    const std::vector<int>& n_list, const std::vector<double>& delta_list,
    int cube_grid_points, int ball_radii, int ball_angles,
    bool with_lebesgue = true);

}  // namespace cylsum

#endif
