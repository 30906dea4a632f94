#include "wrlab/nnwr2d.hpp"

#include <algorithm>
#include <chrono>

#include "wrlab/error.hpp"
#include "wrlab/parallel.hpp"

namespace wrlab {

void HeatProblem2DStrip::validate(const TimeGrid& time) const
{
    const std::size_t nx = grid.x_grid.n_nodes();
    const auto ny = static_cast<std::size_t>(grid.n_y);
    if (!u0.empty() && u0.size() != nx * ny)
        fail(Errc::InvalidArgument, "HeatProblem2DStrip: u0 shape mismatch");
    for (const Trace2D* side : {&left, &right}) {
        if (side->n_y() == 0)
            continue;
        if (side->n_y() != grid.n_y || side->n_time() != time.n_nodes())
            fail(Errc::InvalidArgument, "HeatProblem2DStrip: boundary data shape mismatch");
    }
}

std::vector<TraceSeries> to_modes(const Trace2D& trace, const SineTransform& dst)
{
    const int ny = dst.size();
    if (trace.n_y() != ny)
        fail(Errc::InvalidArgument, "to_modes: y size does not match the transform");
    std::vector<TraceSeries> modes(static_cast<std::size_t>(ny),
                                   TraceSeries(std::vector<double>(trace.n_time(), 0.0)));
    std::vector<double> column(static_cast<std::size_t>(ny)), coeffs(column.size());
    for (std::size_t n = 0; n < trace.n_time(); ++n) {
        for (int j = 0; j < ny; ++j)
            column[static_cast<std::size_t>(j)] = trace.at(j, n);
        dst.forward(column, coeffs);
        for (std::size_t m = 0; m < coeffs.size(); ++m)
            modes[m][n] = coeffs[m];
    }
    return modes;
}

Trace2D from_modes(std::span<const TraceSeries> modes, const SineTransform& dst)
{
    const int ny = dst.size();
    if (modes.size() != static_cast<std::size_t>(ny))
        fail(Errc::InvalidArgument, "from_modes: mode count does not match the transform");
    const std::size_t n_time = modes.front().size();
    Trace2D out(ny, n_time);
    std::vector<double> coeffs(modes.size()), column(modes.size());
    for (std::size_t n = 0; n < n_time; ++n) {
        for (std::size_t m = 0; m < modes.size(); ++m)
            coeffs[m] = modes[m][n];
        dst.inverse(coeffs, column);
        for (int j = 0; j < ny; ++j)
            out.at(j, n) = column[static_cast<std::size_t>(j)];
    }
    return out;
}

HeatProblem1D mode_problem(const HeatProblem2DStrip& problem, const TimeGrid& time,
                           const SineTransform& dst, int mode)
{
    if (mode < 1 || mode > dst.size())
        fail(Errc::IndexOutOfRange, "mode_problem: mode out of range");
    const auto m = static_cast<std::size_t>(mode - 1);
    HeatProblem1D p = HeatProblem1D::homogeneous(problem.grid.x_grid, time);
    p.reaction = static_cast<double>(mode) * mode;

    if (!problem.u0.empty()) {
        const auto ny = static_cast<std::size_t>(problem.grid.n_y);
        std::vector<double> coeffs(ny);
        for (std::size_t i = 0; i < p.u0.size(); ++i) {
            dst.forward(std::span<const double>(problem.u0).subspan(i * ny, ny), coeffs);
            p.u0[i] = coeffs[m];
        }
    }
    if (problem.left.n_y() != 0)
        p.left.data = to_modes(problem.left, dst)[m];
    if (problem.right.n_y() != 0)
        p.right.data = to_modes(problem.right, dst)[m];
    return p;
}

std::vector<Trace2D> monolithic_interface_traces_2d(const HeatProblem2DStrip& problem,
                                                    const Partition& partition,
                                                    const TimeGrid& time, int threads)
{
    problem.validate(time);
    const SineTransform dst(problem.grid.n_y);
    const auto n_modes = static_cast<std::size_t>(dst.size());
    const auto n_if = static_cast<std::size_t>(partition.n_interfaces());

    // per_mode[m][j]: interface j trace of mode m+1
    std::vector<std::vector<TraceSeries>> per_mode(n_modes);
    parallel_for(
        n_modes,
        [&](std::size_t m) {
            const HeatProblem1D p = mode_problem(problem, time, dst, static_cast<int>(m) + 1);
            per_mode[m] = interface_traces(solve_space_time(p, time), partition);
        },
        threads);

    std::vector<Trace2D> out;
    std::vector<TraceSeries> modes(n_modes);
    for (std::size_t j = 0; j < n_if; ++j) {
        for (std::size_t m = 0; m < n_modes; ++m)
            modes[m] = per_mode[m][j];
        out.push_back(from_modes(modes, dst));
    }
    return out;
}

Nnwr2dResult nnwr2d_run(const NnwrConfig& config, const HeatProblem2DStrip& problem,
                        const TimeGrid& time, const std::vector<Trace2D>& initial_guesses,
                        const std::vector<Trace2D>& reference, int threads)
{
    config.validate();
    problem.validate(time);
    if (!(config.partition.grid() == problem.grid.x_grid))
        fail(Errc::InvalidArgument, "nnwr2d_run: partition grid does not match the strip grid");
    const auto n_if = static_cast<std::size_t>(config.partition.n_interfaces());
    if (initial_guesses.size() != n_if || reference.size() != n_if)
        fail(Errc::InvalidArgument, "nnwr2d_run: one trace per interface expected");

    const SineTransform dst(problem.grid.n_y);
    const auto n_modes = static_cast<std::size_t>(dst.size());
    const double dy = problem.grid.dy();

    std::vector<HeatProblem1D> mode_problems;
    std::vector<InterfaceState> states(n_modes);
    for (std::size_t m = 0; m < n_modes; ++m)
        mode_problems.push_back(mode_problem(problem, time, dst, static_cast<int>(m) + 1));
    for (std::size_t j = 0; j < n_if; ++j) {
        std::vector<TraceSeries> modes = to_modes(initial_guesses[j], dst);
        const auto node = static_cast<std::size_t>(config.partition.interface_node(static_cast<int>(j)));
        for (std::size_t m = 0; m < n_modes; ++m) {
            modes[m][0] = mode_problems[m].u0[node];
            states[m].w.push_back(std::move(modes[m]));
        }
    }

    const auto assemble = [&] {
        std::vector<Trace2D> g;
        std::vector<TraceSeries> modes(n_modes);
        for (std::size_t j = 0; j < n_if; ++j) {
            for (std::size_t m = 0; m < n_modes; ++m)
                modes[m] = states[m].w[j];
            g.push_back(from_modes(modes, dst));
        }
        return g;
    };
    const auto error_of = [&](const std::vector<Trace2D>& g) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n_if; ++j)
            worst = std::max(worst, linf_l2_diff(g[j], reference[j], dy));
        return worst;
    };

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    Nnwr2dResult result;
    result.report.method = "NNWR2D";
    result.report.theta = config.theta;
    result.report.t_final = time.t_final();

    result.g = assemble();
    double error = error_of(result.g);
    result.report.records.push_back({0, error, std::nullopt, elapsed()});
    int k = 0;
    while (!(error <= config.tol) && k < config.max_iters) {
        parallel_for(
            n_modes,
            [&](std::size_t m) {
                states[m] = nnwr_iterate(states[m], mode_problems[m], config.partition, time,
                                         config.theta, 1);
            },
            threads);
        ++k;
        result.g = assemble();
        error = error_of(result.g);
        result.report.records.push_back({k, error, std::nullopt, elapsed()});
    }
    result.report.status = error <= config.tol ? RunStatus::Converged : RunStatus::NotConverged;
    return result;
}

}  // namespace wrlab
