#include "wrlab/heat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "wrlab/error.hpp"

namespace wrlab {

BoundaryCondition BoundaryCondition::dirichlet(TraceSeries values)
{
    return {BcKind::Dirichlet, std::move(values)};
}

BoundaryCondition BoundaryCondition::neumann(TraceSeries outward_flux)
{
    return {BcKind::Neumann, std::move(outward_flux)};
}

HeatProblem1D HeatProblem1D::homogeneous(const SpaceGrid1D& grid, const TimeGrid& time)
{
    return HeatProblem1D{
        .grid = grid,
        .kappa = std::vector<double>(static_cast<std::size_t>(grid.n_cells()), 1.0),
        .reaction = 0.0,
        .source = {},
        .u0 = std::vector<double>(grid.n_nodes(), 0.0),
        .left = BoundaryCondition::dirichlet(TraceSeries::zeros(time)),
        .right = BoundaryCondition::dirichlet(TraceSeries::zeros(time)),
    };
}

void HeatProblem1D::validate(const TimeGrid& time) const
{
    const auto bad = [](const std::string& what) { fail(Errc::InvalidArgument, "HeatProblem1D: " + what); };
    if (kappa.size() != static_cast<std::size_t>(grid.n_cells()))
        bad("kappa needs one sample per cell");
    if (!std::all_of(kappa.begin(), kappa.end(), [](double k) { return k > 0.0; }))
        bad("kappa must be strictly positive");
    if (!(reaction >= 0.0))
        bad("reaction must be nonnegative");
    if (u0.size() != grid.n_nodes())
        bad("u0 needs one value per node");
    if (!source.empty() && source.size() != grid.n_nodes() * time.n_nodes())
        bad("source shape does not match the grids");
    if (left.data.size() != time.n_nodes() || right.data.size() != time.n_nodes())
        bad("boundary data must cover every time node");
}

std::vector<double> sample_kappa(const SpaceGrid1D& grid, const std::function<double(double)>& kappa)
{
    std::vector<double> out(static_cast<std::size_t>(grid.n_cells()));
    for (int i = 0; i < grid.n_cells(); ++i)
        out[static_cast<std::size_t>(i)] = kappa(grid.midpoint(i));
    return out;
}

std::vector<double> sample_nodes(const SpaceGrid1D& grid, const std::function<double(double)>& f)
{
    std::vector<double> out(grid.n_nodes());
    for (int i = 0; i <= grid.n_cells(); ++i)
        out[static_cast<std::size_t>(i)] = f(grid.x(i));
    return out;
}

std::vector<double> sample_source(const SpaceGrid1D& grid, const TimeGrid& time,
                                  const std::function<double(double, double)>& f)
{
    std::vector<double> out(grid.n_nodes() * time.n_nodes());
    for (int n = 0; n <= time.n_steps(); ++n)
        for (int i = 0; i <= grid.n_cells(); ++i)
            out[static_cast<std::size_t>(n) * grid.n_nodes() + static_cast<std::size_t>(i)] =
                f(grid.x(i), time.time(n));
    return out;
}

HeatProblem1D restrict_problem(const HeatProblem1D& global, IndexRange range,
                               BoundaryCondition left, BoundaryCondition right)
{
    const auto first = static_cast<std::size_t>(range.first);
    const auto last = static_cast<std::size_t>(range.last);
    HeatProblem1D local{
        .grid = global.grid.sub_grid(range.first, range.last),
        .kappa = std::vector<double>(global.kappa.begin() + static_cast<std::ptrdiff_t>(first),
                                     global.kappa.begin() + static_cast<std::ptrdiff_t>(last)),
        .reaction = global.reaction,
        .source = {},
        .u0 = std::vector<double>(global.u0.begin() + static_cast<std::ptrdiff_t>(first),
                                  global.u0.begin() + static_cast<std::ptrdiff_t>(last + 1)),
        .left = std::move(left),
        .right = std::move(right),
    };
    if (!global.source.empty()) {
        const std::size_t n_global = global.grid.n_nodes();
        const std::size_t n_local = local.grid.n_nodes();
        const std::size_t n_time = global.source.size() / n_global;
        local.source.resize(n_time * n_local);
        for (std::size_t n = 0; n < n_time; ++n)
            std::copy_n(global.source.begin() + static_cast<std::ptrdiff_t>(n * n_global + first),
                        n_local, local.source.begin() + static_cast<std::ptrdiff_t>(n * n_local));
    }
    return local;
}

Field1D::Field1D(std::size_t n_time, std::size_t n_space)
    : n_time_(n_time), n_space_(n_space), data_(n_time * n_space, 0.0)
{
}

TraceSeries Field1D::trace(std::size_t i) const
{
    std::vector<double> v(n_time_);
    for (std::size_t n = 0; n < n_time_; ++n)
        v[n] = at(n, i);
    return TraceSeries(std::move(v));
}

HeatStepper::HeatStepper(const HeatProblem1D& problem, const TimeGrid& time)
    : problem_(&problem), dt_(time.dt()), dx_(problem.grid.dx())
{
    problem.validate(time);
    const std::size_t m = static_cast<std::size_t>(problem.grid.n_cells());
    const double inv_dx2 = 1.0 / (dx_ * dx_);
    const double base = 1.0 / dt_ + problem.reaction;
    const auto& kappa = problem.kappa;

    std::vector<double> lower(m + 1, 0.0), diag(m + 1, 0.0), upper(m + 1, 0.0);
    for (std::size_t i = 1; i < m; ++i) {
        lower[i] = -kappa[i - 1] * inv_dx2;
        upper[i] = -kappa[i] * inv_dx2;
        diag[i] = base + (kappa[i - 1] + kappa[i]) * inv_dx2;
    }
    // End rows: identity for Dirichlet; half-cell balance scaled by 2/dx for Neumann.
    if (problem.left.kind == BcKind::Dirichlet) {
        diag[0] = 1.0;
    } else {
        diag[0] = base + 2.0 * kappa[0] * inv_dx2;
        upper[0] = -2.0 * kappa[0] * inv_dx2;
    }
    if (problem.right.kind == BcKind::Dirichlet) {
        diag[m] = 1.0;
    } else {
        diag[m] = base + 2.0 * kappa[m - 1] * inv_dx2;
        lower[m] = -2.0 * kappa[m - 1] * inv_dx2;
    }
    lu_ = TridiagonalLu(std::move(lower), std::move(diag), std::move(upper));
}

void HeatStepper::step(std::span<const double> u_prev, int n, std::span<double> u_next) const
{
    const HeatProblem1D& p = *problem_;
    const std::size_t m = static_cast<std::size_t>(p.grid.n_cells());
    assert(u_prev.size() == m + 1 && u_next.size() == m + 1);
    assert(n >= 1);
    const auto nn = static_cast<std::size_t>(n);
    const double inv_dt = 1.0 / dt_;

    for (std::size_t i = 0; i <= m; ++i)
        u_next[i] = u_prev[i] * inv_dt + p.source_at(nn, i);

    if (p.left.kind == BcKind::Dirichlet)
        u_next[0] = p.left.data[nn];
    else
        u_next[0] += 2.0 * p.left.data[nn] / dx_;

    if (p.right.kind == BcKind::Dirichlet)
        u_next[m] = p.right.data[nn];
    else
        u_next[m] += 2.0 * p.right.data[nn] / dx_;

    lu_.solve_in_place(u_next);
}

std::vector<double> step_backward_euler(const HeatProblem1D& problem, const TimeGrid& time,
                                        std::span<const double> u_prev, int n)
{
    if (u_prev.size() != problem.grid.n_nodes())
        fail(Errc::InvalidArgument, "step_backward_euler: u_prev needs one value per node");
    if (n < 1 || n > time.n_steps())
        fail(Errc::IndexOutOfRange, "step_backward_euler: time index out of range");
    HeatStepper stepper(problem, time);
    std::vector<double> out(u_prev.size());
    stepper.step(u_prev, n, out);
    return out;
}

Field1D solve_space_time(const HeatProblem1D& problem, const TimeGrid& time)
{
    HeatStepper stepper(problem, time);
    Field1D field(time.n_nodes(), problem.grid.n_nodes());
    std::copy(problem.u0.begin(), problem.u0.end(), field.row(0).begin());
    for (int n = 1; n <= time.n_steps(); ++n) {
        const auto nn = static_cast<std::size_t>(n);
        stepper.step(field.row(nn - 1), n, field.row(nn));
    }
    return field;
}

TraceSeries extract_flux(const Field1D& field, const HeatProblem1D& problem, const TimeGrid& time,
                         End end)
{
    if (problem.boundary(end).kind != BcKind::Dirichlet)
        fail(Errc::WrongBCKind, "extract_flux: end carries a Neumann condition");
    if (field.n_time() != time.n_nodes() || field.n_space() != problem.grid.n_nodes())
        fail(Errc::InvalidArgument, "extract_flux: field shape does not match the problem");

    const std::size_t m = static_cast<std::size_t>(problem.grid.n_cells());
    const std::size_t b = end == End::Left ? 0 : m;
    const std::size_t inner = end == End::Left ? 1 : m - 1;
    const double kappa = end == End::Left ? problem.kappa.front() : problem.kappa.back();
    const double dx = problem.grid.dx();
    const double half = 0.5 * dx;
    const double inv_dt = 1.0 / time.dt();

    TraceSeries flux = TraceSeries::zeros(time);
    for (std::size_t n = 1; n < field.n_time(); ++n) {
        const double ub = field.at(n, b);
        const double storage = (ub - field.at(n - 1, b)) * inv_dt + problem.reaction * ub -
                               problem.source_at(n, b);
        flux[n] = half * storage + kappa * (ub - field.at(n, inner)) / dx;
    }
    return flux;
}

}  // namespace wrlab
