#ifndef CYLSUM_QUADRATURE_HPP
#define CYLSUM_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "cylsum/orthopoly.hpp"
#include "cylsum/space.hpp"

namespace cylsum {

enum class DomainTag { interval, cube, ball1, ball2, cylinder };

/// Nodes and weights with a declared polynomial exactness degree.
/// Nodes are stored flat: node i occupies nodes[i*dim .. i*dim+dim-1].
struct QuadratureRule {
    int dim = 1;
    DomainTag domain = DomainTag::interval;
    int exactness_degree = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    const double* node(std::size_t i) const { return nodes.data() + i * dim; }
    double total_weight() const;
};

/// N-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta, exact
/// to degree 2N-1.  Nodes strictly increasing in (-1,1).
QuadratureRule gauss_jacobi_rule(int n_nodes, const JacobiParams& p);

/// Tensor rule on [-1,1]^m with per-axis Gauss-Jacobi factors; exact for
/// per-axis degree <= 2N-1 (hence total degree <= 2N-1 as well).
QuadratureRule product_rule_cube(int n_per_axis, const std::vector<JacobiParams>& params);

/// Rule on B^d (d = 1 or 2) exact for total degree <= degree against
/// (1-|y|^2)^{mu-1/2}.  d=2 combines a radial Gauss rule in u = 2r^2-1
/// with equally spaced angles.
QuadratureRule ball_rule(int d, double mu, int degree);

/// Tensor of ball_rule and product_rule_cube on the cylinder; node layout
/// is (x_1..x_m, y_1..y_d).
QuadratureRule cylinder_rule(const CylinderSpace& space, int degree);

/// Fixed-order weighted sum over the rule nodes.  Throws if f produces a
/// non-finite value at any node.
double integrate(const std::function<double(const double*)>& f, const QuadratureRule& rule);

}  // namespace cylsum

#endif
