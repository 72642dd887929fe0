#include "cylsum/space.hpp"

#include <cmath>
#include <stdexcept>

namespace cylsum {

CylinderSpace::CylinderSpace(int d_, int m_, double mu_,
                             std::vector<double> a, std::vector<double> b)
    : d(d_), m(m_), mu(mu_), alpha(std::move(a)), beta(std::move(b)) {
    if (d != 1 && d != 2)
        throw std::invalid_argument("CylinderSpace: d must be 1 or 2");
    if (m < 1) throw std::invalid_argument("CylinderSpace: m must be >= 1");
    if (mu < 0.0) throw std::invalid_argument("CylinderSpace: mu must be >= 0");
    if ((int)alpha.size() != m || (int)beta.size() != m)
        throw std::invalid_argument("CylinderSpace: alpha and beta must have length m");
    for (int i = 0; i < m; ++i)
        if (!(alpha[i] > -1.0) || !(beta[i] > -1.0))
            throw std::invalid_argument("CylinderSpace: alpha_i, beta_i must exceed -1");
}

bool CylinderSpace::alpha_beta_condition() const {
    for (int i = 0; i < m; ++i)
        if (alpha[i] + beta[i] < -1.0) return false;
    return true;
}

double ball_weight_mass(int d, double mu) {
    if (d == 1) {
        // int_{-1}^{1} (1-y^2)^{mu-1/2} dy = sqrt(pi) Gamma(mu+1/2) / Gamma(mu+1)
        return std::sqrt(M_PI) *
               std::exp(std::lgamma(mu + 0.5) - std::lgamma(mu + 1.0));
    }
    if (d == 2) return M_PI / (mu + 0.5);
    throw std::invalid_argument("ball_weight_mass: d must be 1 or 2");
}

double CylinderSpace::ball_mass() const { return ball_weight_mass(d, mu); }

double CylinderSpace::weight_mass() const {
    double mass = ball_mass();
    for (int i = 0; i < m; ++i) mass *= jacobi_weight_mass(axis_params(i));
    return mass;
}

}  // namespace cylsum
