#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cylsum/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Fourier orthogonal expansions and Cesaro means on the cylinder"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    int threads = 1;

    const std::vector<std::string> commands = {"bound", "verify", "kernel",
                                               "lebesgue", "converge", "dlambda"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "experiment config file")->required();
        sub->add_option("--out", out_path, "output path (default: config 'out' or stdout)");
        sub->add_option("--format", format, "csv or json (overrides config)");
        sub->add_option("--threads", threads, "reserved; rows are computed in order");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        return (app.exit(e), 2);
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        cylsum::RunConfig cfg = cylsum::load_config_file(config_path);
        if (!out_path.empty()) cfg.out = out_path;
        if (!format.empty()) {
            cfg.format = format;
            cylsum::validate_config(cfg);
        }

        const cylsum::RunResult result = cylsum::run_command(command, cfg);
        const std::string rendered = result.report.render(cfg.format);
        if (cfg.out.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(cfg.out);
            if (!out) throw cylsum::ConfigError("cannot open output path: " + cfg.out);
            out << rendered;
        }
        return result.exit_code;
    } catch (const cylsum::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
