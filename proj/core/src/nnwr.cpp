#include "wrlab/nnwr.hpp"

#include <algorithm>
#include <chrono>

#include "wrlab/error.hpp"
#include "wrlab/parallel.hpp"

namespace wrlab {

void NnwrConfig::validate() const
{
    if (!(theta > 0.0 && theta <= 1.0))
        fail(Errc::InvalidArgument, "NnwrConfig: theta must lie in (0, 1]");
    if (!partition.supports_iteration())
        fail(Errc::InvalidArgument, "NnwrConfig: need at least two subdomains");
    if (max_iters < 0)
        fail(Errc::InvalidArgument, "NnwrConfig: max_iters must be nonnegative");
}

namespace {

void check_state(const InterfaceState& state, const Partition& partition, const TimeGrid& time)
{
    if (state.w.size() != static_cast<std::size_t>(partition.n_interfaces()))
        fail(Errc::InvalidArgument, "NNWR: need one interface trace per interface");
    for (const auto& w : state.w)
        if (w.size() != time.n_nodes())
            fail(Errc::InvalidArgument, "NNWR: interface trace does not cover the time grid");
}

BoundaryCondition homogeneous_like(const BoundaryCondition& bc, const TimeGrid& time)
{
    return {bc.kind, TraceSeries::zeros(time)};
}

}  // namespace

DirichletSweep dirichlet_sweep(const InterfaceState& state, const HeatProblem1D& global,
                               const Partition& partition, const TimeGrid& time, int threads)
{
    check_state(state, partition, time);
    const int n_sub = partition.n_subdomains();
    const auto count = static_cast<std::size_t>(n_sub);

    DirichletSweep out;
    out.problems.reserve(count);
    for (int i = 0; i < n_sub; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        BoundaryCondition left = i == 0 ? global.left : BoundaryCondition::dirichlet(state.w[ii - 1]);
        BoundaryCondition right =
            i == n_sub - 1 ? global.right : BoundaryCondition::dirichlet(state.w[ii]);
        out.problems.push_back(
            restrict_problem(global, partition.local_range(i), std::move(left), std::move(right)));
    }
    out.fields.resize(count);
    out.left_flux.resize(count);
    out.right_flux.resize(count);

    parallel_for(
        count,
        [&](std::size_t i) {
            out.fields[i] = solve_space_time(out.problems[i], time);
            if (i > 0)
                out.left_flux[i] = extract_flux(out.fields[i], out.problems[i], time, End::Left);
            if (i + 1 < count)
                out.right_flux[i] = extract_flux(out.fields[i], out.problems[i], time, End::Right);
        },
        threads);
    return out;
}

std::vector<TraceSeries> flux_jumps(const DirichletSweep& sweep)
{
    std::vector<TraceSeries> jumps;
    for (std::size_t j = 0; j + 1 < sweep.fields.size(); ++j) {
        TraceSeries jump = sweep.right_flux[j];
        const TraceSeries& other = sweep.left_flux[j + 1];
        for (std::size_t n = 0; n < jump.size(); ++n)
            jump[n] += other[n];
        jumps.push_back(std::move(jump));
    }
    return jumps;
}

std::vector<Field1D> neumann_sweep(const DirichletSweep& sweep, const HeatProblem1D& global,
                                   const Partition& partition, const TimeGrid& time, int threads)
{
    const int n_sub = partition.n_subdomains();
    if (sweep.fields.size() != static_cast<std::size_t>(n_sub))
        fail(Errc::InvalidArgument, "neumann_sweep: sweep does not match the partition");
    const std::vector<TraceSeries> jumps = flux_jumps(sweep);

    std::vector<HeatProblem1D> problems;
    problems.reserve(static_cast<std::size_t>(n_sub));
    for (int i = 0; i < n_sub; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        BoundaryCondition left = i == 0 ? homogeneous_like(global.left, time)
                                        : BoundaryCondition::neumann(jumps[ii - 1]);
        BoundaryCondition right = i == n_sub - 1 ? homogeneous_like(global.right, time)
                                                 : BoundaryCondition::neumann(jumps[ii]);
        HeatProblem1D p =
            restrict_problem(global, partition.local_range(i), std::move(left), std::move(right));
        std::fill(p.u0.begin(), p.u0.end(), 0.0);
        p.source.clear();
        problems.push_back(std::move(p));
    }

    std::vector<Field1D> psi(problems.size());
    parallel_for(
        problems.size(), [&](std::size_t i) { psi[i] = solve_space_time(problems[i], time); },
        threads);
    return psi;
}

std::vector<InterfacePsi> interface_psi(std::span<const Field1D> psi)
{
    std::vector<InterfacePsi> out;
    for (std::size_t j = 0; j + 1 < psi.size(); ++j)
        out.push_back({psi[j].trace(End::Right), psi[j + 1].trace(End::Left)});
    return out;
}

InterfaceState nnwr_update(const InterfaceState& state, std::span<const InterfacePsi> psi, double theta)
{
    if (!(theta > 0.0 && theta <= 1.0))
        fail(Errc::InvalidArgument, "nnwr_update: theta must lie in (0, 1]");
    if (psi.size() != state.w.size())
        fail(Errc::InvalidArgument, "nnwr_update: one correction pair per interface expected");
    InterfaceState next{state.w, state.k + 1};
    for (std::size_t j = 0; j < next.w.size(); ++j) {
        TraceSeries& w = next.w[j];
        for (std::size_t n = 0; n < w.size(); ++n)
            w[n] -= theta * (psi[j].from_left[n] + psi[j].from_right[n]);
    }
    return next;
}

InterfaceState nnwr_iterate(const InterfaceState& state, const HeatProblem1D& global,
                            const Partition& partition, const TimeGrid& time, double theta,
                            int threads)
{
    const DirichletSweep sweep = dirichlet_sweep(state, global, partition, time, threads);
    const std::vector<Field1D> psi = neumann_sweep(sweep, global, partition, time, threads);
    const std::vector<InterfacePsi> traces = interface_psi(psi);
    return nnwr_update(state, traces, theta);
}

std::vector<TraceSeries> interface_traces(const Field1D& field, const Partition& partition)
{
    if (field.n_space() != partition.grid().n_nodes())
        fail(Errc::InvalidArgument, "interface_traces: field is not on the partition grid");
    std::vector<TraceSeries> out;
    for (int j = 0; j < partition.n_interfaces(); ++j)
        out.push_back(field.trace(static_cast<std::size_t>(partition.interface_node(j))));
    return out;
}

double max_interface_error(std::span<const TraceSeries> w, std::span<const TraceSeries> reference)
{
    if (w.size() != reference.size())
        fail(Errc::InvalidArgument, "max_interface_error: interface counts differ");
    double worst = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j)
        worst = std::max(worst, max_abs_diff(w[j], reference[j]));
    return worst;
}

IterationReport nnwr_run(const NnwrConfig& config, const HeatProblem1D& global, const TimeGrid& time,
                         std::vector<TraceSeries> initial_guesses,
                         const std::vector<TraceSeries>& reference, int threads)
{
    config.validate();
    if (!(config.partition.grid() == global.grid))
        fail(Errc::InvalidArgument, "nnwr_run: partition grid does not match the problem grid");
    global.validate(time);

    InterfaceState state{std::move(initial_guesses), 0};
    check_state(state, config.partition, time);
    if (reference.size() != state.w.size())
        fail(Errc::InvalidArgument, "nnwr_run: one reference trace per interface expected");
    for (int j = 0; j < config.partition.n_interfaces(); ++j) {
        const auto jj = static_cast<std::size_t>(j);
        state.w[jj][0] = global.u0[static_cast<std::size_t>(config.partition.interface_node(j))];
    }

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    IterationReport report;
    report.method = "NNWR";
    report.theta = config.theta;
    report.t_final = time.t_final();

    double error = max_interface_error(state.w, reference);
    report.records.push_back({0, error, std::nullopt, elapsed()});
    while (!(error <= config.tol) && state.k < config.max_iters) {
        state = nnwr_iterate(state, global, config.partition, time, config.theta, threads);
        error = max_interface_error(state.w, reference);
        report.records.push_back({state.k, error, std::nullopt, elapsed()});
    }
    report.status = error <= config.tol ? RunStatus::Converged : RunStatus::NotConverged;
    return report;
}

}  // namespace wrlab
