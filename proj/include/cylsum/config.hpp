#ifndef CYLSUM_CONFIG_HPP
#define CYLSUM_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cylsum {

/// Raised on malformed configs and bad CLI usage (exit status 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key = value experiment configuration.  Unknown keys are errors;
/// emit() followed by parse_config() reproduces the struct exactly.
struct RunConfig {
    int d = 1;
    int m = 1;
    double mu = 0.0;
    std::vector<double> alpha{-0.5};
    std::vector<double> beta{-0.5};

    std::vector<int> n_list{8, 16, 32};
    std::vector<double> delta_list{0.0, 1.0};

    std::string function = "abs_x1";
    std::vector<double> poly_coeffs{};

    int cube_grid = 17;
    int ball_radii = 33;
    int ball_angles = 32;

    int refinement_level = 1;
    int kernel_points = 5;
    int dlambda_nodes = 4000;
    int dlambda_pairs = 5;
    std::vector<double> lambda_list{1.0, 1.5, 3.0};

    std::string checks = "all";
    double perturb = 0.0;  // test hook: scales one basis constant in verify
    unsigned long long seed = 12345;

    std::string out;
    std::string format = "csv";

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);
std::string emit_config(const RunConfig& cfg);

/// Validates cross-field constraints (vector lengths, ranges, format).
void validate_config(const RunConfig& cfg);

/// 17-significant-digit decimal form used everywhere numbers are emitted.
std::string format_double(double v);

}  // namespace cylsum

#endif
