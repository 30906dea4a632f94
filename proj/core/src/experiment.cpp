#include "wrlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wrlab/csv.hpp"
#include "wrlab/dnwr.hpp"
#include "wrlab/error.hpp"
#include "wrlab/nnwr.hpp"
#include "wrlab/parallel.hpp"

namespace wrlab {

namespace {

constexpr double kModelLeft = -3.0;
constexpr double kModelRight = 2.0;

[[noreturn]] void config_error(const std::string& what)
{
    fail(Errc::ConfigError, what);
}

bool close(double x, double y, double tol)
{
    return std::abs(x - y) <= tol;
}

std::string format_length(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

double model_u0(double x)
{
    return x * (x + 1.0) * (x + 3.0) * (x - 2.0) * std::exp(-x);
}

bool is_two_subdomain(Method m)
{
    return m == Method::Dnwr || m == Method::Swr;
}

}  // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::Dnwr: return "DNWR";
    case Method::Nnwr: return "NNWR";
    case Method::Nnwr2D: return "NNWR2D";
    case Method::Swr: return "SWR";
    }
    return "?";
}

std::string_view to_string(KappaSelector k)
{
    return k == KappaSelector::One ? "one" : "one_plus_exp";
}

std::string_view to_string(ProblemSelector p)
{
    return p == ProblemSelector::Model ? "model" : "error_equations";
}

std::string_view to_string(GuessSelector g)
{
    switch (g) {
    case GuessSelector::TSquared: return "t_squared";
    case GuessSelector::Zero: return "zero";
    case GuessSelector::Custom: return "custom";
    }
    return "?";
}

std::string_view to_string(SwrOrdering o)
{
    return o == SwrOrdering::GaussSeidel ? "gauss_seidel" : "jacobi";
}

std::string_view to_string(BoundMode b)
{
    switch (b) {
    case BoundMode::Superlinear: return "superlinear";
    case BoundMode::Linear: return "linear";
    case BoundMode::None: return "none";
    }
    return "?";
}

std::vector<double> unequal_widths(int n_subdomains)
{
    switch (n_subdomains) {
    case 2: return {3.50, 2.50};
    case 3: return {2.30, 2.30, 1.40};
    case 4: return {1.20, 2.40, 1.80, 0.60};
    case 5: return {1.80, 1.40, 1.08, 1.00, 0.72};
    case 6: return {1.20, 0.80, 1.00, 1.20, 1.00, 0.80};
    default: fail(Errc::InvalidArgument, "unequal_widths: N must be 2..6");
    }
}

SpaceGrid1D ExperimentConfig::space_grid() const
{
    try {
        return SpaceGrid1D::with_spacing(x_left, x_right, dx);
    } catch (const Error& e) {
        config_error(e.what());
    }
}

TimeGrid ExperimentConfig::time_grid() const
{
    try {
        return TimeGrid::with_step(t_final, dt);
    } catch (const Error& e) {
        config_error(e.what());
    }
}

Partition ExperimentConfig::partition() const
{
    const SpaceGrid1D grid = space_grid();
    try {
        Partition p = Partition::build(grid, interfaces);
        for (std::size_t j = 0; j < interfaces.size(); ++j) {
            const double snapped = p.interface_coordinate(static_cast<int>(j));
            if (!close(snapped, interfaces[j], 1e-9 * std::max(1.0, std::abs(interfaces[j])) + 1e-12))
                config_error("interface " + format_length(interfaces[j]) +
                             " is not a grid node (nearest " + format_length(snapped) + ")");
        }
        return p;
    } catch (const Error& e) {
        if (e.code() == Errc::ConfigError)
            throw;
        config_error(e.what());
    }
}

int ExperimentConfig::swr_overlap_cells() const
{
    const double length = overlap > 0.0 ? overlap : 2.0 * dx;
    const double cells = length / (2.0 * dx);
    const double rounded = std::round(cells);
    if (rounded < 1.0 || std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells))
        config_error("SWR overlap must be an even positive multiple of dx");
    return static_cast<int>(rounded);
}

void ExperimentConfig::validate() const
{
    if (!(dx > 0.0) || !(dt > 0.0) || !(t_final > 0.0))
        config_error("dx, dt and T must be positive");
    const Partition p = partition();
    (void)time_grid();
    if (thetas.empty())
        config_error("need at least one theta");
    for (double theta : thetas)
        if (!(theta > 0.0 && theta <= 1.0))
            config_error("theta must lie in (0, 1]");
    if (max_iters < 0)
        config_error("max_iters must be nonnegative");
    if (!(tol >= 0.0))
        config_error("tol must be nonnegative");

    if (is_two_subdomain(method) && interfaces.size() != 1)
        config_error(std::string(to_string(method)) + " needs exactly one interface");
    if (!p.supports_iteration())
        config_error("need at least two subdomains");

    if (method == Method::Nnwr2D) {
        if (n_y < 1)
            config_error("n_y must be positive");
        if (kappa != KappaSelector::One)
            config_error("NNWR2D supports kappa = one only");
        if (problem == ProblemSelector::Model && !(x_left == 0.0 && x_right == 1.0))
            config_error("the 2D model problem lives on x in (0, 1)");
    } else if (problem == ProblemSelector::Model &&
               !(close(x_left, kModelLeft, 1e-12) && close(x_right, kModelRight, 1e-12))) {
        config_error("the 1D model problem lives on (-3, 2); use error_equations elsewhere");
    }

    if (method == Method::Swr) {
        const int m = swr_overlap_cells();
        const int node = p.interface_node(0);
        if (node - m <= 0 || node + m >= p.grid().n_cells())
            config_error("SWR overlap reaches the physical boundary");
    }

    if (guess == GuessSelector::Custom && custom_guess.size() != time_grid().n_nodes())
        config_error("custom initial guess needs one sample per time node");
}

std::string ExperimentConfig::resolved_geometry_id() const
{
    if (!geometry_id.empty())
        return geometry_id;
    const Partition p = partition();
    std::string suffix = kappa == KappaSelector::OnePlusExp ? "-kappa1pexp" : "";
    if (is_two_subdomain(method)) {
        const double a = p.width(0);
        const double b = p.width(1);
        return "a" + format_length(a) + "-b" + format_length(b) + suffix;
    }
    const int n = p.n_subdomains();
    if (method == Method::Nnwr2D)
        return "strips-N" + std::to_string(n);
    if (close(x_left, 0.0, 1e-12) && close(x_right, 6.0, 1e-12) && n >= 2 && n <= 6) {
        const std::vector<double> table = unequal_widths(n);
        const std::vector<double> actual = p.widths();
        bool table_row = true;
        bool equal = true;
        for (std::size_t i = 0; i < actual.size(); ++i) {
            table_row = table_row && close(actual[i], table[i], 0.5 * dx);
            equal = equal && close(actual[i], actual[0], 0.5 * dx);
        }
        if (table_row)
            return "nnwr-N" + std::to_string(n) + suffix;
        if (equal)
            return "nnwr-equal-N" + std::to_string(n) + suffix;
    }
    return "nnwr-custom-N" + std::to_string(n) + suffix;
}

HeatProblem1D build_problem(const ExperimentConfig& config)
{
    const SpaceGrid1D grid = config.space_grid();
    const TimeGrid time = config.time_grid();
    HeatProblem1D p = HeatProblem1D::homogeneous(grid, time);
    if (config.kappa == KappaSelector::OnePlusExp)
        p.kappa = sample_kappa(grid, [](double x) { return 1.0 + std::exp(x); });
    if (config.problem == ProblemSelector::Model) {
        p.u0 = sample_nodes(grid, model_u0);
        p.left.data = TraceSeries::sample(time, [](double t) { return t; });
        p.right.data = TraceSeries::sample(time, [](double t) { return t * std::exp(-t); });
    }
    return p;
}

HeatProblem2DStrip build_problem_2d(const ExperimentConfig& config)
{
    HeatProblem2DStrip p{SpaceGrid2DStrip(config.space_grid(), config.n_y), {}, {}, {}};
    if (config.problem == ProblemSelector::Model) {
        const auto ny = static_cast<std::size_t>(config.n_y);
        const SpaceGrid1D& xg = p.grid.x_grid;
        p.u0.resize(xg.n_nodes() * ny);
        for (int i = 0; i <= xg.n_cells(); ++i)
            for (int j = 0; j < config.n_y; ++j)
                p.u0[static_cast<std::size_t>(i) * ny + static_cast<std::size_t>(j)] =
                    std::sin(2.0 * std::numbers::pi * xg.x(i)) *
                    std::sin(3.0 * std::numbers::pi * p.grid.y(j + 1));
    }
    return p;
}

std::vector<TraceSeries> reference_solve(const ExperimentConfig& config)
{
    config.validate();
    if (config.method == Method::Nnwr2D)
        config_error("reference_solve: use reference_solve_2d for NNWR2D");
    const HeatProblem1D problem = build_problem(config);
    const Field1D field = solve_space_time(problem, config.time_grid());
    const Partition p = config.partition();
    if (config.method == Method::Swr) {
        const auto node = static_cast<std::size_t>(p.interface_node(0) + config.swr_overlap_cells());
        return {field.trace(node)};
    }
    return interface_traces(field, p);
}

std::vector<Trace2D> reference_solve_2d(const ExperimentConfig& config)
{
    config.validate();
    return monolithic_interface_traces_2d(build_problem_2d(config), config.partition(),
                                          config.time_grid());
}

TraceSeries initial_guess(const ExperimentConfig& config)
{
    const TimeGrid time = config.time_grid();
    switch (config.guess) {
    case GuessSelector::TSquared: return TraceSeries::sample(time, [](double t) { return t * t; });
    case GuessSelector::Zero: return TraceSeries::zeros(time);
    case GuessSelector::Custom:
        if (config.custom_guess.size() != time.n_nodes())
            config_error("custom initial guess needs one sample per time node");
        return TraceSeries(config.custom_guess);
    }
    return TraceSeries::zeros(time);
}

std::optional<BoundSpec> matching_bound(const ExperimentConfig& config, double theta)
{
    if (config.bound == BoundMode::None)
        return std::nullopt;
    const Partition p = config.partition();
    const double half_cell = 0.5 * config.dx;
    switch (config.method) {
    case Method::Dnwr: {
        BoundSpec spec;
        spec.a = p.width(0);
        spec.b = p.width(1);
        spec.t_final = config.t_final;
        spec.theta = theta;
        if (close(spec.a, spec.b, half_cell)) {
            spec.which = BoundKind::EqualSubdomains;
            spec.b = spec.a;
            return spec;
        }
        if (!close(theta, 0.5, 1e-12))
            return std::nullopt;
        const bool linear = config.bound == BoundMode::Linear;
        if (spec.a > spec.b)
            spec.which = linear ? BoundKind::DirichletLargerLinear : BoundKind::DirichletLargerSuperlinear;
        else
            spec.which = linear ? BoundKind::NeumannLargerLinear : BoundKind::NeumannLargerSuperlinear;
        return spec;
    }
    case Method::Nnwr:
    case Method::Nnwr2D: {
        if (!close(theta, 0.25, 1e-12) || config.bound == BoundMode::Linear)
            return std::nullopt;
        BoundSpec spec;
        spec.which = config.method == Method::Nnwr ? BoundKind::Nnwr : BoundKind::Nnwr2D;
        spec.h_min = p.h_min();
        spec.t_final = config.t_final;
        spec.theta = theta;
        return spec;
    }
    case Method::Swr:
        return std::nullopt;
    }
    return std::nullopt;
}

void attach_bounds(IterationReport& report, const BoundSpec& spec)
{
    if (report.records.empty())
        return;
    const double e0 = report.initial_error();
    for (auto& r : report.records) {
        const std::optional<double> factor = bound_for_iteration(spec, r.k);
        r.bound = factor ? std::optional<double>(*factor * e0) : std::nullopt;
    }
}

IterationReport swr_baseline(const ExperimentConfig& config)
{
    config.validate();
    if (config.method != Method::Swr)
        config_error("swr_baseline: config method must be SWR");

    const HeatProblem1D global = build_problem(config);
    const TimeGrid time = config.time_grid();
    const Partition p = config.partition();
    const int node = p.interface_node(0);
    const int m = config.swr_overlap_cells();
    const int left_end = node + m;   // right boundary of the left subdomain
    const int right_start = node - m; // left boundary of the right subdomain
    const int n_cells = p.grid().n_cells();

    HeatProblem1D left = restrict_problem(global, {0, left_end}, global.left,
                                          BoundaryCondition::dirichlet(TraceSeries::zeros(time)));
    HeatProblem1D right = restrict_problem(global, {right_start, n_cells},
                                           BoundaryCondition::dirichlet(TraceSeries::zeros(time)),
                                           global.right);
    // Global node left_end sits at local index left_end - right_start of the right piece;
    // global node right_start at local index right_start of the left piece.
    const auto in_right = static_cast<std::size_t>(left_end - right_start);
    const auto in_left = static_cast<std::size_t>(right_start);

    const TraceSeries reference = reference_solve(config).front();
    TraceSeries g_left = initial_guess(config);
    TraceSeries g_right = initial_guess(config);
    g_left[0] = global.u0[static_cast<std::size_t>(left_end)];
    g_right[0] = global.u0[static_cast<std::size_t>(right_start)];

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    IterationReport report;
    report.method = "SWR";
    report.theta = 1.0;
    report.t_final = time.t_final();
    report.geometry_id = config.resolved_geometry_id();

    double error = max_abs_diff(g_left, reference);
    report.records.push_back({0, error, std::nullopt, elapsed()});
    for (int k = 1; !(error <= config.tol) && k <= config.max_iters; ++k) {
        left.right.data = g_left;
        const Field1D u_left = solve_space_time(left, time);
        if (config.swr_ordering == SwrOrdering::GaussSeidel)
            right.left.data = u_left.trace(in_left);
        else
            right.left.data = g_right;
        const Field1D u_right = solve_space_time(right, time);
        g_right = u_left.trace(in_left);
        g_left = u_right.trace(in_right);
        error = max_abs_diff(g_left, reference);
        report.records.push_back({k, error, std::nullopt, elapsed()});
    }
    report.status = error <= config.tol ? RunStatus::Converged : RunStatus::NotConverged;
    return report;
}

namespace {

IterationReport run_single(const ExperimentConfig& config, double theta, int threads)
{
    const TimeGrid time = config.time_grid();
    IterationReport report;
    switch (config.method) {
    case Method::Swr:
        return swr_baseline(config);
    case Method::Dnwr: {
        const HeatProblem1D problem = build_problem(config);
        const Partition p = config.partition();
        DnwrConfig dc{.theta = theta,
                      .max_iters = config.max_iters,
                      .tol = config.tol,
                      .a = p.width(0),
                      .b = p.width(1)};
        report = dnwr_run(dc, problem, time, initial_guess(config), reference_solve(config).front());
        break;
    }
    case Method::Nnwr: {
        const HeatProblem1D problem = build_problem(config);
        const Partition p = config.partition();
        NnwrConfig nc{.theta = theta, .max_iters = config.max_iters, .tol = config.tol, .partition = p};
        std::vector<TraceSeries> guesses(static_cast<std::size_t>(p.n_interfaces()), initial_guess(config));
        report = nnwr_run(nc, problem, time, std::move(guesses), reference_solve(config), threads);
        break;
    }
    case Method::Nnwr2D: {
        const HeatProblem2DStrip problem = build_problem_2d(config);
        const Partition p = config.partition();
        NnwrConfig nc{.theta = theta, .max_iters = config.max_iters, .tol = config.tol, .partition = p};
        const TraceSeries g = initial_guess(config);
        Trace2D guess(config.n_y, time.n_nodes());
        for (int j = 0; j < config.n_y; ++j)
            std::copy(g.values.begin(), g.values.end(), guess.row(j).begin());
        std::vector<Trace2D> guesses(static_cast<std::size_t>(p.n_interfaces()), guess);
        report = nnwr2d_run(nc, problem, time, guesses, reference_solve_2d(config), threads).report;
        break;
    }
    }
    report.geometry_id = config.resolved_geometry_id();
    if (const auto spec = matching_bound(config, theta))
        attach_bounds(report, *spec);
    return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config)
{
    config.validate();
    ExperimentReport out;
    if (config.method == Method::Swr) {
        out.runs.push_back(swr_baseline(config));
    } else {
        out.runs.resize(config.thetas.size());
        const int inner_threads = config.thetas.size() > 1 ? 1 : 0;
        parallel_for(config.thetas.size(), [&](std::size_t i) {
            out.runs[i] = run_single(config, config.thetas[i], inner_threads);
        });
    }
    if (!config.output_path.empty())
        emit_csv(out, config.output_path);
    return out;
}

ExperimentReport run_experiments(std::span<const ExperimentConfig> configs)
{
    ExperimentReport out;
    for (const auto& c : configs) {
        ExperimentReport r = run_experiment(c);
        for (auto& run : r.runs)
            out.runs.push_back(std::move(run));
    }
    return out;
}

}  // namespace wrlab
