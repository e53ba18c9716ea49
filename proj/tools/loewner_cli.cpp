#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lk/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Loewner-Kufarev evolution engine"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_override;
    bool verbose = false;

    CLI::App* run = app.add_subcommand("run", "execute a declarative experiment config");
    run->add_option("config", config_path, "path to the JSON experiment config")->required();
    run->add_option("-o,--output", output_override, "override the output directory");
    run->add_flag("-v,--verbose", verbose, "log per-analysis progress");

    CLI::App* catalogue =
        app.add_subcommand("catalogue", "list built-in term families and theorem coverage");

    CLI11_PARSE(app, argc, argv);

    if (catalogue->parsed()) {
        std::cout << lk::list_catalogue();
        return 0;
    }

    try {
        lk::ExperimentConfig config = lk::parse_config_file(config_path);
        if (!output_override.empty()) {
            config.output_dir = output_override;
        }
        std::ostream null_stream{nullptr};
        const lk::RunStatus status =
            lk::run_experiment(config, verbose ? std::cerr : null_stream);
        return static_cast<int>(status);
    } catch (const lk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return static_cast<int>(lk::RunStatus::ConfigError);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(lk::RunStatus::RuntimeError);
    }
}
