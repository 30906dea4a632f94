#include "wrlab/dnwr.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "wrlab/error.hpp"

namespace wrlab {

void DnwrConfig::validate(const SpaceGrid1D& grid) const
{
    if (!(theta > 0.0 && theta <= 1.0))
        fail(Errc::InvalidArgument, "DnwrConfig: theta must lie in (0, 1]");
    if (!(a > 0.0 && b > 0.0))
        fail(Errc::InvalidArgument, "DnwrConfig: subdomain widths must be positive");
    if (std::abs(a + b - grid.width()) > 0.5 * grid.dx()) {
        std::ostringstream os;
        os << "DnwrConfig: a + b = " << a + b << " does not match the domain width " << grid.width();
        fail(Errc::InvalidArgument, os.str());
    }
    if (max_iters < 0)
        fail(Errc::InvalidArgument, "DnwrConfig: max_iters must be nonnegative");
}

DnwrSubproblems split_for_dnwr(const HeatProblem1D& global, const TimeGrid& time, double a)
{
    global.validate(time);
    const double x_interface = global.grid.x_left() + a;
    const double interior[] = {x_interface};
    const Partition partition = Partition::build(global.grid, interior);
    const int node = partition.interface_node(0);
    return DnwrSubproblems{
        .dirichlet_side = restrict_problem(global, partition.local_range(0), global.left,
                                           BoundaryCondition::dirichlet(TraceSeries::zeros(time))),
        .neumann_side = restrict_problem(global, partition.local_range(1),
                                         BoundaryCondition::neumann(TraceSeries::zeros(time)),
                                         global.right),
        .interface_node = node,
    };
}

DnwrSweep dnwr_sweep(const TraceSeries& h, const DnwrSubproblems& sub, const TimeGrid& time)
{
    if (h.size() != time.n_nodes())
        fail(Errc::InvalidArgument, "dnwr_sweep: interface trace does not cover the time grid");

    HeatProblem1D dirichlet = sub.dirichlet_side;
    dirichlet.right = BoundaryCondition::dirichlet(h);
    DnwrSweep out;
    out.dirichlet_field = solve_space_time(dirichlet, time);
    out.interface_flux = extract_flux(out.dirichlet_field, dirichlet, time, End::Right);

    // d_n2 u2 = -d_n1 u1: the Neumann side's outward flux is the negated one.
    HeatProblem1D neumann = sub.neumann_side;
    TraceSeries transmitted = out.interface_flux;
    for (double& v : transmitted.values)
        v = -v;
    neumann.left = BoundaryCondition::neumann(std::move(transmitted));
    out.neumann_field = solve_space_time(neumann, time);
    out.neumann_trace = out.neumann_field.trace(End::Left);
    return out;
}

DnwrState dnwr_iterate(const DnwrState& state, const DnwrSubproblems& sub, const TimeGrid& time,
                       double theta)
{
    const DnwrSweep sweep = dnwr_sweep(state.h, sub, time);
    DnwrState next;
    next.k = state.k + 1;
    next.history = state.history;
    next.h = state.h;
    for (std::size_t n = 0; n < next.h.size(); ++n)
        next.h[n] = theta * sweep.neumann_trace[n] + (1.0 - theta) * state.h[n];
    return next;
}

IterationReport dnwr_run(const DnwrConfig& config, const HeatProblem1D& global, const TimeGrid& time,
                         const TraceSeries& initial_guess, const TraceSeries& reference)
{
    config.validate(global.grid);
    if (initial_guess.size() != time.n_nodes() || reference.size() != time.n_nodes())
        fail(Errc::InvalidArgument, "dnwr_run: traces must cover the time grid");

    const DnwrSubproblems sub = split_for_dnwr(global, time, config.a);
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    DnwrState state;
    state.h = initial_guess;
    state.h[0] = global.u0[static_cast<std::size_t>(sub.interface_node)];

    IterationReport report;
    report.method = "DNWR";
    report.theta = config.theta;
    report.t_final = time.t_final();

    double error = max_abs_diff(state.h, reference);
    state.history.push_back(error);
    report.records.push_back({0, error, std::nullopt, elapsed()});
    while (!(error <= config.tol) && state.k < config.max_iters) {
        state = dnwr_iterate(state, sub, time, config.theta);
        error = max_abs_diff(state.h, reference);
        state.history.push_back(error);
        report.records.push_back({state.k, error, std::nullopt, elapsed()});
    }
    report.status = error <= config.tol ? RunStatus::Converged : RunStatus::NotConverged;
    return report;
}

}  // namespace wrlab
