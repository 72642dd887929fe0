#include "cylsum/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cylsum {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw ConfigError("not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw ConfigError("not an integer: '" + s + "'");
    return (int)v;
}

std::vector<double> to_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split(s, ','))
        if (!item.empty()) out.push_back(to_double(item));
    if (out.empty()) throw ConfigError("empty number list: '" + s + "'");
    return out;
}

std::vector<int> to_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& item : split(s, ','))
        if (!item.empty()) out.push_back(to_int(item));
    if (out.empty()) throw ConfigError("empty integer list: '" + s + "'");
    return out;
}

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += format_double(v[i]);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    // poly_coeffs defaults to empty and an empty list cannot be written, so
    // parse it only when present.
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "d") cfg.d = to_int(val);
        else if (key == "m") cfg.m = to_int(val);
        else if (key == "mu") cfg.mu = to_double(val);
        else if (key == "alpha") cfg.alpha = to_doubles(val);
        else if (key == "beta") cfg.beta = to_doubles(val);
        else if (key == "n_list") cfg.n_list = to_ints(val);
        else if (key == "delta_list") cfg.delta_list = to_doubles(val);
        else if (key == "function") cfg.function = val;
        else if (key == "poly_coeffs") cfg.poly_coeffs = val.empty() ? std::vector<double>{} : to_doubles(val);
        else if (key == "cube_grid") cfg.cube_grid = to_int(val);
        else if (key == "ball_radii") cfg.ball_radii = to_int(val);
        else if (key == "ball_angles") cfg.ball_angles = to_int(val);
        else if (key == "refinement_level") cfg.refinement_level = to_int(val);
        else if (key == "kernel_points") cfg.kernel_points = to_int(val);
        else if (key == "dlambda_nodes") cfg.dlambda_nodes = to_int(val);
        else if (key == "dlambda_pairs") cfg.dlambda_pairs = to_int(val);
        else if (key == "lambda_list") cfg.lambda_list = to_doubles(val);
        else if (key == "checks") cfg.checks = val;
        else if (key == "perturb") cfg.perturb = to_double(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "out") cfg.out = val;
        else if (key == "format") cfg.format = val;
        else throw ConfigError("config line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
    validate_config(cfg);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string emit_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "d = " << cfg.d << "\n";
    out << "m = " << cfg.m << "\n";
    out << "mu = " << format_double(cfg.mu) << "\n";
    out << "alpha = " << join_doubles(cfg.alpha) << "\n";
    out << "beta = " << join_doubles(cfg.beta) << "\n";
    out << "n_list = " << join_ints(cfg.n_list) << "\n";
    out << "delta_list = " << join_doubles(cfg.delta_list) << "\n";
    out << "function = " << cfg.function << "\n";
    out << "poly_coeffs = " << join_doubles(cfg.poly_coeffs) << "\n";
    out << "cube_grid = " << cfg.cube_grid << "\n";
    out << "ball_radii = " << cfg.ball_radii << "\n";
    out << "ball_angles = " << cfg.ball_angles << "\n";
    out << "refinement_level = " << cfg.refinement_level << "\n";
    out << "kernel_points = " << cfg.kernel_points << "\n";
    out << "dlambda_nodes = " << cfg.dlambda_nodes << "\n";
    out << "dlambda_pairs = " << cfg.dlambda_pairs << "\n";
    out << "lambda_list = " << join_doubles(cfg.lambda_list) << "\n";
    out << "checks = " << cfg.checks << "\n";
    out << "perturb = " << format_double(cfg.perturb) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "out = " << cfg.out << "\n";
    out << "format = " << cfg.format << "\n";
    return out.str();
}

void validate_config(const RunConfig& cfg) {
    if (cfg.d != 1 && cfg.d != 2) throw ConfigError("d must be 1 or 2");
    if (cfg.m < 1) throw ConfigError("m must be >= 1");
    if (cfg.mu < 0.0) throw ConfigError("mu must be >= 0");
    if ((int)cfg.alpha.size() != cfg.m || (int)cfg.beta.size() != cfg.m)
        throw ConfigError("alpha and beta must each list m values");
    for (int i = 0; i < cfg.m; ++i)
        if (cfg.alpha[i] <= -1.0 || cfg.beta[i] <= -1.0)
            throw ConfigError("alpha and beta entries must exceed -1");
    if (cfg.n_list.empty()) throw ConfigError("n_list must be non-empty");
    for (int n : cfg.n_list)
        if (n < 0) throw ConfigError("n_list entries must be >= 0");
    if (cfg.delta_list.empty()) throw ConfigError("delta_list must be non-empty");
    for (double d : cfg.delta_list)
        if (d < 0.0) throw ConfigError("delta_list entries must be >= 0");
    if (cfg.cube_grid < 2 || cfg.ball_radii < 2 || cfg.ball_angles < 1)
        throw ConfigError("grid sizes out of range");
    if (cfg.refinement_level < 1) throw ConfigError("refinement_level must be >= 1");
    if (cfg.kernel_points < 1) throw ConfigError("kernel_points must be >= 1");
    if (cfg.dlambda_nodes < 1 || cfg.dlambda_pairs < 1)
        throw ConfigError("dlambda_nodes and dlambda_pairs must be >= 1");
    for (double l : cfg.lambda_list)
        if (l < 0.5) throw ConfigError("lambda_list entries must be >= 1/2");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be 'csv' or 'json'");
}

}  // namespace cylsum
