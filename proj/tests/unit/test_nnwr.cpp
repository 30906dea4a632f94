#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wrlab/dnwr.hpp"
#include "wrlab/error.hpp"
#include "wrlab/experiment.hpp"
#include "wrlab/nnwr.hpp"
#include "wrlab/theory.hpp"

using namespace wrlab;

namespace {

const TimeGrid kTime = TimeGrid::with_step(2.0, 0.004);

HeatProblem1D model_problem()
{
    const auto grid = SpaceGrid1D::with_spacing(-3.0, 2.0, 0.02);
    HeatProblem1D p = HeatProblem1D::homogeneous(grid, kTime);
    p.kappa = sample_kappa(grid, [](double x) { return 1.0 + std::exp(x); });
    p.u0 = sample_nodes(grid, [](double x) { return x * (x + 1) * (x + 3) * (x - 2) * std::exp(-x); });
    p.left.data = TraceSeries::sample(kTime, [](double t) { return t; });
    p.right.data = TraceSeries::sample(kTime, [](double t) { return t * std::exp(-t); });
    return p;
}

Partition partition_of(const SpaceGrid1D& grid, std::vector<double> interfaces)
{
    return Partition::build(grid, interfaces);
}

InterfaceState t_squared_state(const Partition& p)
{
    InterfaceState s;
    for (int j = 0; j < p.n_interfaces(); ++j) {
        s.w.push_back(TraceSeries::sample(kTime, [](double t) { return t * t; }));
        s.w.back()[0] = 0.0;
    }
    return s;
}

IterationReport error_equation_run(const std::vector<double>& widths, double theta, int iters,
                                   double tol = 0.0, int threads = 0)
{
    const auto grid = SpaceGrid1D::with_spacing(0.0, 6.0, 0.02);
    const HeatProblem1D zero = HeatProblem1D::homogeneous(grid, kTime);
    const Partition p = Partition::from_widths(grid, widths);
    const NnwrConfig cfg{.theta = theta, .max_iters = iters, .tol = tol, .partition = p};
    const std::vector<TraceSeries> ref(static_cast<std::size_t>(p.n_interfaces()), TraceSeries::zeros(kTime));
    return nnwr_run(cfg, zero, kTime, t_squared_state(p).w, ref, threads);
}

}  // namespace

TEST(Nnwr, ZeroDataZeroSweep)
{
    const auto grid = SpaceGrid1D::with_spacing(0.0, 6.0, 0.02);
    const HeatProblem1D zero = HeatProblem1D::homogeneous(grid, kTime);
    const Partition p = partition_of(grid, {1.2, 3.6, 5.4});
    InterfaceState s;
    s.w.assign(3, TraceSeries::zeros(kTime));
    const DirichletSweep sweep = dirichlet_sweep(s, zero, p, kTime);
    for (const auto& f : sweep.fields)
        for (std::size_t n = 0; n < f.n_time(); ++n)
            for (double v : f.row(n))
                EXPECT_EQ(v, 0.0);
    for (const auto& j : flux_jumps(sweep))
        EXPECT_EQ(max_abs(j), 0.0);
    EXPECT_TRUE(sweep.left_flux.front().values.empty());
    EXPECT_TRUE(sweep.right_flux.back().values.empty());
    const auto psi = neumann_sweep(sweep, zero, p, kTime);
    for (const auto& f : psi)
        for (std::size_t n = 0; n < f.n_time(); ++n)
            for (double v : f.row(n))
                EXPECT_EQ(v, 0.0);
}

TEST(Nnwr, MonolithicTracesAreFixedPoint)
{
    const HeatProblem1D global = model_problem();
    const Partition p = partition_of(global.grid, {-1.8, -0.5, 1.0});
    const Field1D mono = solve_space_time(global, kTime);
    const InterfaceState s{interface_traces(mono, p), 0};

    const DirichletSweep sweep = dirichlet_sweep(s, global, p, kTime);
    for (const auto& jump : flux_jumps(sweep))
        EXPECT_LE(max_abs(jump), 1e-10);
    for (double theta : {0.25, 0.1}) {
        const InterfaceState next = nnwr_iterate(s, global, p, kTime, theta);
        EXPECT_LE(max_interface_error(next.w, s.w), 1e-10);
    }
}

TEST(Nnwr, TwoSubdomainFluxMatchesDnwrDirichletStep)
{
    const HeatProblem1D global = model_problem();
    const Partition p = partition_of(global.grid, {0.0});
    InterfaceState s;
    s.w.push_back(TraceSeries::sample(kTime, [](double t) { return std::cos(t); }));
    const DirichletSweep sweep = dirichlet_sweep(s, global, p, kTime);

    const DnwrSubproblems sub = split_for_dnwr(global, kTime, 3.0);
    const DnwrSweep d = dnwr_sweep(s.w[0], sub, kTime);
    for (std::size_t n = 0; n < kTime.n_nodes(); ++n)
        EXPECT_NEAR(sweep.right_flux[0][n], d.interface_flux[n], 1e-12 * (1.0 + std::abs(d.interface_flux[n])));
}

TEST(Nnwr, CorrectionsMirrorOnSymmetricHalves)
{
    const auto grid = SpaceGrid1D::with_spacing(0.0, 4.0, 0.02);
    const HeatProblem1D zero = HeatProblem1D::homogeneous(grid, kTime);
    const Partition p = partition_of(grid, {2.0});
    InterfaceState s;
    s.w.push_back(TraceSeries::sample(kTime, [](double t) { return t * std::exp(-t); }));
    const DirichletSweep sweep = dirichlet_sweep(s, zero, p, kTime);
    const auto psi = neumann_sweep(sweep, zero, p, kTime);
    const std::size_t m = psi[0].n_space() - 1;
    for (std::size_t n = 0; n < kTime.n_nodes(); n += 25)
        for (std::size_t i = 0; i <= m; ++i)
            EXPECT_NEAR(psi[0].at(n, i), psi[1].at(n, m - i), 1e-13);
}

TEST(Nnwr, CorrectionMatchesDirectNeumannSolve)
{
    const auto grid = SpaceGrid1D::with_spacing(0.0, 3.0, 0.02);
    const HeatProblem1D zero = HeatProblem1D::homogeneous(grid, kTime);
    const Partition p = partition_of(grid, {1.0});
    InterfaceState s;
    s.w.push_back(TraceSeries::sample(kTime, [](double t) { return std::sin(2.0 * t); }));
    const DirichletSweep sweep = dirichlet_sweep(s, zero, p, kTime);
    const TraceSeries jump = flux_jumps(sweep)[0];
    const auto psi = neumann_sweep(sweep, zero, p, kTime);

    // Direct solve on (0, 1): homogeneous Dirichlet at x = 0, the jump as outward flux at x = 1.
    HeatProblem1D direct = HeatProblem1D::homogeneous(grid.sub_grid(0, 50), kTime);
    direct.right = BoundaryCondition::neumann(jump);
    const Field1D expected = solve_space_time(direct, kTime);
    EXPECT_EQ(psi[0], expected);
    EXPECT_GT(max_abs(jump), 0.0);
}

TEST(Nnwr, UpdateRules)
{
    InterfaceState s;
    s.w.push_back(TraceSeries::sample(kTime, [](double t) { return t; }));
    const InterfacePsi zero{TraceSeries::zeros(kTime), TraceSeries::zeros(kTime)};
    const std::vector<InterfacePsi> psi{zero};
    const InterfaceState same = nnwr_update(s, psi, 0.25);
    EXPECT_EQ(same.w[0], s.w[0]);
    EXPECT_EQ(same.k, 1);

    const InterfacePsi ones{TraceSeries::constant(kTime, 1.0), TraceSeries::constant(kTime, 3.0)};
    const InterfaceState moved = nnwr_update(s, std::vector<InterfacePsi>{ones}, 0.25);
    EXPECT_DOUBLE_EQ(moved.w[0][10], s.w[0][10] - 1.0);

    EXPECT_THROW(nnwr_update(s, psi, 0.0), Error);
    EXPECT_THROW(nnwr_update(s, psi, 1.5), Error);
}

TEST(Nnwr, EqualHalvesConvergeInOneStepAtQuarterTheta)
{
    const auto r = error_equation_run({3.0, 3.0}, 0.25, 2);
    EXPECT_LE(r.records[1].error, 1e-10 * r.records[0].error);
}

TEST(Nnwr, ThreadCountDoesNotChangeResults)
{
    const auto one = error_equation_run(unequal_widths(4), 0.25, 5, 0.0, 1);
    const auto four = error_equation_run(unequal_widths(4), 0.25, 5, 0.0, 4);
    ASSERT_EQ(one.records.size(), four.records.size());
    for (std::size_t k = 0; k < one.records.size(); ++k)
        EXPECT_EQ(one.records[k].error, four.records[k].error);
}

TEST(Nnwr, FourSubdomainsRespectBound)
{
    const auto r = error_equation_run(unequal_widths(4), 0.25, 14);
    const BoundSpec spec{.which = BoundKind::Nnwr, .h_min = 0.6, .t_final = 2.0, .theta = 0.25};
    double previous = bound_value(spec, 0);
    for (const auto& rec : r.records) {
        const double factor = bound_value(spec, rec.k);
        if (rec.k > 0 && factor < previous && factor < 1.0)
            EXPECT_LE(rec.error, 1.1 * factor * r.records[0].error) << "k = " << rec.k;
        previous = factor;
    }
}

TEST(Nnwr, OtherThetasConvergeLinearly)
{
    for (double theta : {0.1, 0.4}) {
        const auto r = error_equation_run(unequal_widths(4), theta, 10);
        std::vector<double> k, le;
        for (std::size_t i = 2; i < r.records.size(); ++i) {
            k.push_back(r.records[i].k);
            le.push_back(std::log(r.records[i].error));
        }
        EXPECT_GE(oracle::fit_line(k, le).r_squared, 0.98) << "theta = " << theta;
    }
}

TEST(Nnwr, MoreSubdomainsConvergeSlower)
{
    int previous = 0;
    for (int n = 2; n <= 6; ++n) {
        const auto r = error_equation_run(std::vector<double>(static_cast<std::size_t>(n), 6.0 / n), 0.25, 30, 1e-10);
        const auto iters = r.iterations_to(1e-10 * r.records[0].error);
        ASSERT_TRUE(iters.has_value());
        EXPECT_GE(*iters, previous) << "N = " << n;
        previous = *iters;
    }
    EXPECT_GT(previous, 1);
}

TEST(Nnwr, ConfigValidation)
{
    const auto grid = SpaceGrid1D::with_spacing(0.0, 6.0, 0.02);
    const NnwrConfig single{.partition = Partition::build(grid, std::vector<double>{})};
    EXPECT_THROW(single.validate(), Error);
    const NnwrConfig zero_theta{.theta = 0.0, .partition = partition_of(grid, {3.0})};
    EXPECT_THROW(zero_theta.validate(), Error);
}
