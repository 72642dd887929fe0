#ifndef CYLSUM_SPACE_HPP
#define CYLSUM_SPACE_HPP

#include <vector>

#include "cylsum/orthopoly.hpp"

namespace cylsum {

/// The cylinder B^d x [-1,1]^m with weight
///   w(alpha,beta,mu; x,y) = prod_i (1-x_i)^{alpha_i}(1+x_i)^{beta_i}
///                           * (1-|y|^2)^{mu-1/2}.
/// Supported ball dimensions are d = 1 (any mu >= 0) and d = 2 (mu = 1/2,
/// the case with an explicit basis).
struct CylinderSpace {
    int d;
    int m;
    double mu;
    std::vector<double> alpha;
    std::vector<double> beta;

    CylinderSpace(int d, int m, double mu,
                  std::vector<double> alpha, std::vector<double> beta);

    JacobiParams axis_params(int i) const { return {alpha[i], beta[i]}; }

    /// Convergence hypothesis alpha_i + beta_i >= -1 for every axis.  Recorded,
    /// not enforced; the expansion itself does not need it.
    bool alpha_beta_condition() const;

    /// Total mass of the ball weight factor.
    double ball_mass() const;

    /// Total mass of the full cylinder weight.
    double weight_mass() const;
};

/// Total mass of (1-|y|^2)^{mu-1/2} on B^d, d in {1,2}.
double ball_weight_mass(int d, double mu);

}  // namespace cylsum

#endif
