#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrlab/heat.hpp"
#include "wrlab/mesh.hpp"
#include "wrlab/nnwr2d.hpp"
#include "wrlab/report.hpp"
#include "wrlab/theory.hpp"
#include "wrlab/trace.hpp"

namespace wrlab {

enum class Method { Dnwr, Nnwr, Nnwr2D, Swr };
enum class KappaSelector { One, OnePlusExp };
/// Model: the 1D test problem on (-3, 2) with u0 = x(x+1)(x+3)(x-2)e^{-x},
/// u(-3,t) = t, u(2,t) = t e^{-t}; in 2D, u0 = sin(2 pi x) sin(3 pi y) on
/// (0, 1) x (0, pi). ErrorEquations: all data zero.
enum class ProblemSelector { Model, ErrorEquations };
enum class GuessSelector { TSquared, Zero, Custom };
enum class SwrOrdering { GaussSeidel, Jacobi };
enum class BoundMode { Superlinear, Linear, None };

std::string_view to_string(Method m);
std::string_view to_string(KappaSelector k);
std::string_view to_string(ProblemSelector p);
std::string_view to_string(GuessSelector g);
std::string_view to_string(SwrOrdering o);
std::string_view to_string(BoundMode b);

/// One experiment: a method on one geometry, swept over relaxation parameters.
struct ExperimentConfig {
    Method method = Method::Dnwr;
    double x_left = -3.0;
    double x_right = 2.0;
    std::vector<double> interfaces{0.0};
    double dx = 2e-2;
    double dt = 4e-3;
    double t_final = 2.0;
    std::vector<double> thetas{0.5};
    KappaSelector kappa = KappaSelector::One;
    ProblemSelector problem = ProblemSelector::Model;
    GuessSelector guess = GuessSelector::TSquared;
    std::vector<double> custom_guess;  ///< one sample per time node, used on every interface
    int max_iters = 30;
    double tol = 1e-12;
    int n_y = 31;                      ///< NNWR2D interior y nodes
    double overlap = 0.0;              ///< SWR overlap length; 0 means 2 dx
    SwrOrdering swr_ordering = SwrOrdering::GaussSeidel;
    BoundMode bound = BoundMode::Superlinear;
    std::string geometry_id;           ///< derived when empty
    std::string output_path;

    /// Throws ConfigError on any inconsistency.
    void validate() const;

    SpaceGrid1D space_grid() const;
    TimeGrid time_grid() const;
    Partition partition() const;
    std::string resolved_geometry_id() const;
    /// Number of grid cells each SWR subdomain extends past the interface.
    int swr_overlap_cells() const;
};

/// Subdomain widths of the unequal NNWR decompositions of (0, 6), N = 2..6.
std::vector<double> unequal_widths(int n_subdomains);

HeatProblem1D build_problem(const ExperimentConfig& config);
HeatProblem2DStrip build_problem_2d(const ExperimentConfig& config);

/// Interface traces of the undecomposed discrete solution. For SWR this is
/// the trace at the right end of the left subdomain.
std::vector<TraceSeries> reference_solve(const ExperimentConfig& config);
std::vector<Trace2D> reference_solve_2d(const ExperimentConfig& config);

/// Initial interface guess on the time grid (before t = 0 pinning).
TraceSeries initial_guess(const ExperimentConfig& config);

/// The estimate that applies to (method, theta, geometry), if any.
std::optional<BoundSpec> matching_bound(const ExperimentConfig& config, double theta);

/// Sets record.bound = factor(k) * initial error wherever the estimate defines one.
void attach_bounds(IterationReport& report, const BoundSpec& spec);

/// Overlapping Schwarz waveform relaxation with Dirichlet transmission.
IterationReport swr_baseline(const ExperimentConfig& config);

/// Runs every theta (concurrently, bounded by WRLAB_THREADS), attaches bounds,
/// and writes the CSV when output_path is set.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Runs several configs and concatenates the reports in order.
ExperimentReport run_experiments(std::span<const ExperimentConfig> configs);

/// JSON config handling. A file holds either one config object or
/// {"runs": [config, ...]} with an optional top-level "output".
ExperimentConfig parse_config(std::string_view json_text);
std::vector<ExperimentConfig> parse_config_set(std::string_view json_text, std::string* output = nullptr);
std::vector<ExperimentConfig> load_config_file(const std::string& path, std::string* output = nullptr);
std::string to_json(const ExperimentConfig& config);
std::string to_json(std::span<const ExperimentConfig> configs, const std::string& output = {});

/// Canned configurations that regenerate the published convergence figures.
/// Their output paths are empty; the caller decides where the CSV goes.
std::vector<std::string> figure_ids();
std::vector<ExperimentConfig> figure_configs(std::string_view figure_id);

}  // namespace wrlab
