#ifndef CYLSUM_TESTFUNCTIONS_HPP
#define CYLSUM_TESTFUNCTIONS_HPP

#include <string>
#include <vector>

#include "cylsum/cylinder.hpp"

namespace cylsum {

/// Built-in reproducible test functions for convergence experiments:
///   poly      - sum_k c_k x_1^k with the given coefficients
///   abs_x1    - |x_1|  (continuous, not differentiable)
///   exp_x1y1  - exp(x_1 + y_1)  (analytic)
///   bump      - (1 - |y|^2)^{3/2}  (C^1 but not C^2 at the ball boundary)
CylinderFn make_test_function(const std::string& name,
                              const std::vector<double>& poly_coeffs, int d);

/// Names accepted by make_test_function.
std::vector<std::string> test_function_names();

}  // namespace cylsum

#endif
