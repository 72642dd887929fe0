#include "cylsum/testfunctions.hpp"

#include <cmath>
#include <stdexcept>

namespace cylsum {

CylinderFn make_test_function(const std::string& name,
                              const std::vector<double>& poly_coeffs, int d) {
    if (name == "poly") {
        if (poly_coeffs.empty())
            throw std::invalid_argument("test function 'poly' needs coefficients");
        return [poly_coeffs](const double* x, const double*) {
            double v = 0.0;
            for (std::size_t k = poly_coeffs.size(); k-- > 0;)
                v = v * x[0] + poly_coeffs[k];
            return v;
        };
    }
    if (name == "abs_x1")
        return [](const double* x, const double*) { return std::abs(x[0]); };
    if (name == "exp_x1y1")
        return [](const double* x, const double* y) { return std::exp(x[0] + y[0]); };
    if (name == "bump")
        return [d](const double*, const double* y) {
            double r2 = 0.0;
            for (int i = 0; i < d; ++i) r2 += y[i] * y[i];
            return std::pow(std::max(0.0, 1.0 - r2), 1.5);
        };
    throw std::invalid_argument("unknown test function: " + name);
}

std::vector<std::string> test_function_names() {
    return {"poly", "abs_x1", "exp_x1y1", "bump"};
}

}  // namespace cylsum
