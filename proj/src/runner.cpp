#include "cylsum/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>

#include "cylsum/analysis.hpp"
#include "cylsum/testfunctions.hpp"

namespace cylsum {

namespace {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    double unit() {  // in [0, 1)
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z ^= z >> 30; z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27; z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return (double)(z >> 11) * 0x1.0p-53;
    }
    double symmetric() { return 2.0 * unit() - 1.0; }
};

std::vector<double> random_ball_point(Rng& rng, int d) {
    if (d == 1) return {rng.symmetric()};
    const double r = std::sqrt(rng.unit());
    const double t = 2.0 * M_PI * rng.unit();
    return {r * std::cos(t), r * std::sin(t)};
}

std::vector<double> random_cube_point(Rng& rng, int m) {
    std::vector<double> x(m);
    for (int i = 0; i < m; ++i) x[i] = rng.symmetric();
    return x;
}

class Timer {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }
};

// ---- verify checks ------------------------------------------------------

struct CheckResult {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool passed = false;
};

// std::max silently drops NaN in its second argument, so a non-finite
// deviation must be pinned to infinity explicitly or a check could pass
// while computing garbage.
void track_dev(double& acc, double dev) {
    if (!std::isfinite(dev))
        acc = std::numeric_limits<double>::infinity();
    else
        acc = std::max(acc, dev);
}

CheckResult check_cesaro_binomial() {
    CheckResult r{"cesaro_binomial", 0.0, 1e-12, false};
    const double deltas[] = {0.0, 0.5, 1.0, 2.3};
    for (int n = 0; n <= 50; ++n)
        for (int j = 0; j <= n; ++j)
            for (double delta : deltas) {
                const double got = cesaro_coeff(n, j, delta);
                const double oracle = binomial_real(n - j + delta, n - j) /
                                      binomial_real(n + delta, n);
                track_dev(r.max_dev, std::abs(got - oracle) / std::abs(oracle));
            }
    r.passed = r.max_dev <= r.tol;
    return r;
}

CheckResult gram_check(const std::string& name, const CylinderSpace& space,
                       double perturb) {
    CheckResult r{name, 0.0, 1e-9, false};
    const int degree = 6;
    const auto basis = enumerate_basis(space, degree);
    const QuadratureRule rule = cylinder_rule(space, 2 * degree + 2);
    const std::size_t nb = basis.size();
    std::vector<double> gram(nb * nb, 0.0);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const double* node = rule.node(q);
        auto vals = eval_basis_all(space, basis, degree, node, node + space.m);
        vals[0] *= 1.0 + perturb;  // test hook: injected constant error
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = a; b < nb; ++b)
                gram[a * nb + b] += rule.weights[q] * vals[a] * vals[b];
    }
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = a; b < nb; ++b) {
            const double expect = (a == b) ? 1.0 : 0.0;
            track_dev(r.max_dev, std::abs(gram[a * nb + b] - expect));
        }
    r.passed = r.max_dev <= r.tol;
    return r;
}

CheckResult check_compact_direct(std::uint64_t seed) {
    CheckResult r{"compact_direct", 0.0, 1e-8, false};
    struct Case { int d; double mu; };
    const Case cases[] = {{1, 0.0}, {1, 1.5}, {2, 0.5}};
    Rng rng(seed ^ 0xc0ffee);
    for (const auto& c : cases)
        for (int pair = 0; pair < 20; ++pair) {
            const auto y = random_ball_point(rng, c.d);
            const auto yp = random_ball_point(rng, c.d);
            for (int n = 0; n <= 10; ++n) {
                const double compact = ball_kernel_compact(n, c.d, c.mu, y.data(), yp.data());
                const double direct = ball_kernel_direct(n, c.d, c.mu, y.data(), yp.data());
                track_dev(r.max_dev, std::abs(compact - direct));
            }
        }
    r.passed = r.max_dev <= r.tol;
    return r;
}

CheckResult check_reproducing(const CylinderSpace& space, std::uint64_t seed) {
    CheckResult r{"reproducing", 0.0, 1e-8, false};
    Rng rng(seed ^ 0xfeed);
    for (int n : {1, 3, 5}) {
        // A random polynomial in the span: f = sum_t a_t e_t.
        const auto basis = enumerate_basis(space, n);
        std::vector<double> a(basis.size());
        for (auto& v : a) v = rng.symmetric();
        auto f = [&](const double* x, const double* y) {
            const auto vals = eval_basis_all(space, basis, n, x, y);
            double s = 0.0;
            for (std::size_t t = 0; t < vals.size(); ++t) s += a[t] * vals[t];
            return s;
        };
        const QuadratureRule rule = cylinder_rule(space, 2 * n + 2);
        for (int rep = 0; rep < 3; ++rep) {
            const auto xp = random_cube_point(rng, space.m);
            const auto yp = random_ball_point(rng, space.d);
            double integral = 0.0;
            for (std::size_t q = 0; q < rule.size(); ++q) {
                const double* node = rule.node(q);
                integral += rule.weights[q] * f(node, node + space.m) *
                            kernel(space, n, node, xp.data(), node + space.m, yp.data());
            }
            track_dev(r.max_dev, std::abs(integral - f(xp.data(), yp.data())));
        }
    }
    r.passed = r.max_dev <= r.tol;
    return r;
}

CheckResult check_cesaro_collapse(const CylinderSpace& space, std::uint64_t seed) {
    CheckResult r{"cesaro_collapse", 0.0, 0.0, false};
    const int n = 6;
    const auto f = make_test_function("exp_x1y1", {}, space.d);
    const ExpansionCoeffs coeffs = expand(space, n, f, 2 * n + 16);
    const CesaroCoeffs plan(n, 0.0);
    Rng rng(seed ^ 0xabcd);
    for (int rep = 0; rep < 10; ++rep) {
        const auto xp = random_cube_point(rng, space.m);
        const auto yp = random_ball_point(rng, space.d);
        const double a = cesaro_sum_eval(coeffs, plan, xp.data(), yp.data());
        const double b = partial_sum_eval(coeffs, n, xp.data(), yp.data());
        track_dev(r.max_dev, std::abs(a - b));
    }
    r.passed = r.max_dev == 0.0;  // bitwise contract
    return r;
}

CheckResult check_dlambda(const std::string& name, const std::vector<double>& lambdas,
                          double tol, std::uint64_t seed) {
    CheckResult r{name, 0.0, tol, false};
    Rng rng(seed ^ 0xd1a);
    for (double lambda : lambdas)
        for (int pair = 0; pair < 5; ++pair) {
            const double v = 0.9 * rng.symmetric();
            const double u = 0.9 * rng.symmetric();
            const auto [est, exact] = dlambda_identity_check(lambda, v, u, 4000);
            track_dev(r.max_dev, std::abs(est - exact));
        }
    r.passed = r.max_dev <= r.tol;
    return r;
}

// ---- commands -----------------------------------------------------------

Report cmd_bound(const RunConfig& cfg) {
    const CylinderSpace space = space_from_config(cfg);
    const CriticalIndexReport cr = critical_delta(space);
    const std::string flag = cr.hypothesis_ok ? "" : "hypothesis_violated";
    Report rep{"bound", cfg, {}};
    Timer t;
    rep.rows.push_back({"bound", 0, 0.0, "first_term", cr.first_term, 0.0, t.seconds(), flag});
    rep.rows.push_back({"bound", 0, 0.0, "second_term", cr.second_term, 0.0, t.seconds(), flag});
    rep.rows.push_back({"bound", 0, 0.0, "bound", cr.bound, 0.0, t.seconds(), flag});
    return rep;
}

RunResult cmd_verify(const RunConfig& cfg) {
    const CylinderSpace space = space_from_config(cfg);
    using Entry = std::pair<std::string, std::function<CheckResult()>>;
    const std::vector<Entry> registry = {
        {"cesaro_binomial", [&] { return check_cesaro_binomial(); }},
        {"gram_cheb",
         [&] { return gram_check("gram_cheb", {1, 1, 0.0, {-0.5}, {-0.5}}, cfg.perturb); }},
        {"gram_disk",
         [&] { return gram_check("gram_disk", {2, 1, 0.5, {0.0}, {0.0}}, cfg.perturb); }},
        {"compact_direct", [&] { return check_compact_direct(cfg.seed); }},
        {"reproducing", [&] { return check_reproducing(space, cfg.seed); }},
        {"cesaro_collapse", [&] { return check_cesaro_collapse(space, cfg.seed); }},
        {"dlambda_identity",
         [&] { return check_dlambda("dlambda_identity", {1.0, 1.5, 3.0}, 1e-5, cfg.seed); }},
        {"dlambda_identity_near_half",
         [&] { return check_dlambda("dlambda_identity_near_half", {0.5 + 1e-3}, 1e-3,
                                    cfg.seed); }},
    };

    std::vector<std::string> selected;
    if (cfg.checks == "all") {
        for (const auto& e : registry) selected.push_back(e.first);
    } else {
        std::stringstream ss(cfg.checks);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) selected.push_back(item);
    }
    if (selected.empty()) throw ConfigError("verify: empty check selection");
    for (const auto& name : selected) {
        bool known = false;
        for (const auto& e : registry) known = known || e.first == name;
        if (!known) throw ConfigError("verify: unknown check '" + name + "'");
    }

    RunResult result{{"verify", cfg, {}}, 0};
    for (const auto& e : registry) {
        bool wanted = false;
        for (const auto& name : selected) wanted = wanted || name == e.first;
        if (!wanted) continue;
        Timer t;
        const CheckResult cr = e.second();
        result.report.rows.push_back({"verify", 0, 0.0, cr.name, cr.max_dev, 0.0,
                                      t.seconds(), cr.passed ? "pass" : "fail"});
        if (!cr.passed) result.exit_code = 1;
    }
    return result;
}

Report cmd_kernel(const RunConfig& cfg) {
    const CylinderSpace space = space_from_config(cfg);
    Report rep{"kernel", cfg, {}};
    for (double delta : cfg.delta_list)
        for (int n : cfg.n_list) {
            Rng rng(cfg.seed);  // same points for every (n, delta)
            const CesaroCoeffs plan(n, delta);
            for (int pt = 0; pt < cfg.kernel_points; ++pt) {
                const auto x = random_cube_point(rng, space.m);
                const auto xp = random_cube_point(rng, space.m);
                const auto y = random_ball_point(rng, space.d);
                const auto yp = random_ball_point(rng, space.d);
                Timer t;
                const double v =
                    cesaro_kernel(space, plan, x.data(), xp.data(), y.data(), yp.data());
                rep.rows.push_back({"kernel", n, delta, "cesaro_kernel_pt" + std::to_string(pt),
                                    v, 0.0, t.seconds(), ""});
            }
        }
    return rep;
}

Report cmd_lebesgue(const RunConfig& cfg) {
    const CylinderSpace space = space_from_config(cfg);
    const auto grid = ball_grid(space.d, cfg.ball_radii, cfg.ball_angles);
    Report rep{"lebesgue", cfg, {}};
    for (double delta : cfg.delta_list)
        for (int n : cfg.n_list) {
            Timer t;
            const LebesgueEstimate e =
                lebesgue_sup(space, n, delta, grid, cfg.refinement_level);
            rep.rows.push_back({"lebesgue", n, delta, "lebesgue_sup", e.value,
                                e.refinement, t.seconds(),
                                e.reliable ? "" : "unreliable"});
        }
    return rep;
}

Report cmd_converge(const RunConfig& cfg) {
    const CylinderSpace space = space_from_config(cfg);
    const auto f = make_test_function(cfg.function, cfg.poly_coeffs, space.d);
    Timer t;
    const auto rows = convergence_experiment(space, f, cfg.n_list, cfg.delta_list,
                                             cfg.cube_grid, cfg.ball_radii,
                                             cfg.ball_angles, true);
    Report rep{"converge", cfg, {}};
    for (const auto& row : rows) {
        const std::string flag = row.reliable ? "" : "unreliable";
        rep.rows.push_back({"converge", row.n, row.delta, "l1_error", row.l1, 0.0,
                            t.seconds(), ""});
        rep.rows.push_back({"converge", row.n, row.delta, "l2_error", row.l2, 0.0,
                            t.seconds(), ""});
        rep.rows.push_back({"converge", row.n, row.delta, "sup_error", row.sup, 0.0,
                            t.seconds(), ""});
        rep.rows.push_back({"converge", row.n, row.delta, "lebesgue_sup", row.lebesgue,
                            row.lebesgue_refinement, t.seconds(), flag});
    }
    return rep;
}

Report cmd_dlambda(const RunConfig& cfg) {
    Report rep{"dlambda", cfg, {}};
    for (double lambda : cfg.lambda_list) {
        Rng rng(cfg.seed);
        for (int pair = 0; pair < cfg.dlambda_pairs; ++pair) {
            const double v = 0.9 * rng.symmetric();
            const double u = 0.9 * rng.symmetric();
            Timer t;
            const auto [est, exact] =
                dlambda_identity_check(lambda, v, u, cfg.dlambda_nodes);
            const double secs = t.seconds();
            rep.rows.push_back({"dlambda", pair, lambda, "estimate", est, 0.0, secs, ""});
            rep.rows.push_back({"dlambda", pair, lambda, "exact", exact, 0.0, secs, ""});
        }
    }
    return rep;
}

}  // namespace

CylinderSpace space_from_config(const RunConfig& cfg) {
    try {
        return CylinderSpace(cfg.d, cfg.m, cfg.mu, cfg.alpha, cfg.beta);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

RunResult run_command(const std::string& command, const RunConfig& cfg) {
    if (command == "bound") return {cmd_bound(cfg), 0};
    if (command == "verify") return cmd_verify(cfg);
    if (command == "kernel") return {cmd_kernel(cfg), 0};
    if (command == "lebesgue") return {cmd_lebesgue(cfg), 0};
    if (command == "converge") return {cmd_converge(cfg), 0};
    if (command == "dlambda") return {cmd_dlambda(cfg), 0};
    throw ConfigError("unknown command: " + command);
}

}  // namespace cylsum
