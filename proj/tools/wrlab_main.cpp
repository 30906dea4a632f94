// wrlab: run waveform relaxation experiments, print bound tables, reproduce figures.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "wrlab/csv.hpp"
#include "wrlab/error.hpp"
#include "wrlab/experiment.hpp"
#include "wrlab/theory.hpp"

namespace {

void summarize(const wrlab::ExperimentReport& report)
{
    for (const auto& run : report.runs) {
        std::fprintf(stderr, "%-7s theta=%-5g %-22s iters=%-3d final error=%.3e %s\n", run.method.c_str(),
                     run.theta, run.geometry_id.c_str(), run.records.empty() ? 0 : run.records.back().k,
                     run.final_error(),
                     run.status == wrlab::RunStatus::Converged ? "converged" : "not converged");
    }
}

void write_report(const wrlab::ExperimentReport& report, const std::string& output)
{
    if (output.empty() || output == "-") {
        wrlab::write_csv(report, std::cout);
    } else {
        wrlab::emit_csv(report, output);
        std::fprintf(stderr, "wrote %zu rows to %s\n", report.row_count(), output.c_str());
    }
}

int run_command(const std::string& config_path, const std::string& output_flag)
{
    // Precedence: --output, then the file's output, then stdout. All rows go to one CSV.
    std::string output;
    auto configs = wrlab::load_config_file(config_path, &output);
    if (!output_flag.empty())
        output = output_flag;
    for (auto& c : configs)
        c.output_path.clear();
    const auto report = wrlab::run_experiments(configs);
    summarize(report);
    write_report(report, output);
    return 0;
}

int bounds_command(const std::string& which, double a, double b, double h_min, double t_final,
                   double theta, int kmax)
{
    wrlab::BoundSpec spec;
    spec.which = wrlab::parse_bound_kind(which);
    spec.a = a;
    spec.b = b;
    spec.h_min = h_min;
    spec.t_final = t_final;
    spec.theta = theta;
    spec.validate();
    std::printf("k,bound\n");
    for (int k = 0; k <= kmax; ++k)
        std::printf("%d,%.17g\n", k, wrlab::bound_value(spec, k));
    return 0;
}

int reproduce_command(const std::string& id, const std::string& output, bool dump_config)
{
    const auto configs = wrlab::figure_configs(id);
    const std::string target = output.empty() ? id + ".csv" : output;
    if (dump_config) {
        std::cout << wrlab::to_json(configs, target) << '\n';
        return 0;
    }
    const auto report = wrlab::run_experiments(configs);
    summarize(report);
    write_report(report, target);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Waveform relaxation lab: DNWR, NNWR and SWR experiments for the heat equation"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run the experiments described by a JSON config file");
    std::string config_path, run_output;
    run->add_option("--config", config_path, "Config file (one config or {\"runs\": [...]})")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--output", run_output, "CSV path, '-' for stdout (overrides the file's output)");

    auto* bounds = app.add_subcommand("bounds", "Print a convergence bound table");
    std::string which;
    double a = 0.0, b = 0.0, h_min = 0.0, t_final = 0.0, theta = 0.5;
    int kmax = 10;
    bounds->add_option("--which", which,
                       "equal | dirichlet-larger-linear | dirichlet-larger-superlinear | "
                       "neumann-larger-linear | neumann-larger-superlinear | nnwr | nnwr2d")
        ->required();
    bounds->add_option("--a", a, "Dirichlet subdomain length");
    bounds->add_option("--b", b, "Neumann subdomain length");
    bounds->add_option("--h-min", h_min, "Smallest NNWR subdomain width");
    bounds->add_option("--T", t_final, "Time horizon");
    bounds->add_option("--theta", theta, "Relaxation parameter (equal kind)");
    bounds->add_option("--kmax", kmax, "Largest index")->check(CLI::NonNegativeNumber);

    auto* reproduce = app.add_subcommand("reproduce", "Run a canned figure configuration");
    std::string figure_id, reproduce_output;
    bool dump_config = false, list = false;
    reproduce->add_option("figure-id", figure_id, "Figure id (see --list)");
    reproduce->add_option("--output", reproduce_output, "CSV path (default <figure-id>.csv), '-' for stdout");
    reproduce->add_flag("--dump-config", dump_config, "Print the config as JSON instead of running");
    reproduce->add_flag("--list", list, "List figure ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(config_path, run_output);
        if (bounds->parsed())
            return bounds_command(which, a, b, h_min, t_final, theta, kmax);
        if (list) {
            for (const auto& id : wrlab::figure_ids())
                std::cout << id << '\n';
            return 0;
        }
        if (figure_id.empty()) {
            std::cerr << "reproduce: give a figure id or --list\n";
            return 2;
        }
        return reproduce_command(figure_id, reproduce_output, dump_config);
    } catch (const wrlab::Error& e) {
        std::cerr << "wrlab: " << wrlab::to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    }
}
