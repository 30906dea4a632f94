// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "manufactured.hpp"
#include "oracles.hpp"
#include "wrlab/dnwr.hpp"
#include "wrlab/experiment.hpp"
#include "wrlab/nnwr.hpp"
#include "wrlab/nnwr2d.hpp"
#include "wrlab/theory.hpp"

using namespace wrlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << "[violated] " << what << "; ";
        }
    }
};

const TimeGrid kTime = TimeGrid::with_step(2.0, 0.004);

TraceSeries t_squared(const TimeGrid& time)
{
    TraceSeries s = TraceSeries::sample(time, [](double t) { return t * t; });
    return s;
}

IterationReport dnwr_errors(double a, double b, double theta, int iters, const TimeGrid& time)
{
    const auto grid = SpaceGrid1D::with_spacing(-a, b, 0.02);
    const HeatProblem1D zero = HeatProblem1D::homogeneous(grid, time);
    const DnwrConfig cfg{.theta = theta, .max_iters = iters, .tol = 0.0, .a = a, .b = b};
    return dnwr_run(cfg, zero, time, t_squared(time), TraceSeries::zeros(time));
}

HeatProblem1D model_problem(bool variable_kappa)
{
    ExperimentConfig c;
    c.kappa = variable_kappa ? KappaSelector::OnePlusExp : KappaSelector::One;
    return build_problem(c);
}

void dnwr_equal_subdomains(Outcome& o)
{
    const auto one = dnwr_errors(2.5, 2.5, 0.5, 1, kTime);
    const double r1 = one.records[1].error / one.records[0].error;
    o.require(r1 <= 1e-10, "theta=1/2 one-step reduction");
    o.detail << "h1/h0=" << r1 << " ";
    for (double theta : {0.2, 0.35}) {
        const auto r = dnwr_errors(2.5, 2.5, theta, 11, kTime);
        const double target = std::abs(1.0 - 2.0 * theta);
        double worst = 0.0;
        for (int k = 1; k <= 10; ++k) {
            const double ratio = r.records[static_cast<std::size_t>(k + 1)].error / r.records[static_cast<std::size_t>(k)].error;
            worst = std::max(worst, std::abs(ratio / target - 1.0));
        }
        o.require(worst <= 0.05, "ratio within 5% of |1-2theta|");
        o.detail << "theta=" << theta << " max rel dev=" << worst << " ";
    }
}

void dnwr_dirichlet_larger(Outcome& o)
{
    const auto r = dnwr_errors(3.0, 2.0, 0.5, 8, kTime);
    const BoundSpec spec{.which = BoundKind::DirichletLargerSuperlinear, .a = 3.0, .b = 2.0, .t_final = 2.0};
    double worst = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const double ratio = r.records[static_cast<std::size_t>(k)].error / (bound_value(spec, k) * r.initial_error());
        worst = std::max(worst, ratio);
    }
    o.require(worst <= 1.10, "T=2 error <= 1.10 x bound");
    o.detail << "T=2 max error/bound=" << worst << " ";

    const TimeGrid long_time = TimeGrid::with_step(50.0, 0.004);
    const auto l = dnwr_errors(3.0, 2.0, 0.5, 8, long_time);
    const double limit = 1.10 * (3.0 - 2.0) / (2.0 * 3.0);
    double worst_ratio = 0.0;
    for (std::size_t k = 1; k < l.records.size(); ++k)
        worst_ratio = std::max(worst_ratio, l.records[k].error / l.records[k - 1].error);
    o.require(worst_ratio <= limit, "T=50 per-step ratio <= 1.10 (a-b)/(2a)");
    o.detail << "T=50 max ratio=" << worst_ratio << " limit=" << limit;
}

void dnwr_neumann_larger(Outcome& o)
{
    const int pairs = 10;
    const auto r = dnwr_errors(2.0, 3.0, 0.5, 2 * pairs, kTime);
    const BoundSpec spec{.which = BoundKind::NeumannLargerSuperlinear, .a = 2.0, .b = 3.0, .t_final = 2.0};
    double worst = 0.0;
    int checked = 0;
    for (int k = 1; k <= pairs; ++k) {
        const double factor = bound_value(spec, k);
        if (!(factor < bound_value(spec, k - 1)))
            continue;
        ++checked;
        worst = std::max(worst, r.records[static_cast<std::size_t>(2 * k)].error / (factor * r.initial_error()));
    }
    o.require(checked > 0, "at least one decreasing bound index");
    o.require(worst <= 1.10, "even-iteration error <= 1.10 x bound");
    o.detail << "checked " << checked << " even iterates, max error/bound=" << worst;
}

IterationReport unequal_four_run(double theta, int iters)
{
    const auto grid = SpaceGrid1D::with_spacing(0.0, 6.0, 0.02);
    const HeatProblem1D zero = HeatProblem1D::homogeneous(grid, kTime);
    const Partition p = Partition::from_widths(grid, unequal_widths(4));
    const NnwrConfig cfg{.theta = theta, .max_iters = iters, .tol = 0.0, .partition = p};
    const std::vector<TraceSeries> guess(3, t_squared(kTime));
    const std::vector<TraceSeries> ref(3, TraceSeries::zeros(kTime));
    return nnwr_run(cfg, zero, kTime, guess, ref);
}

void nnwr_four_subdomains(Outcome& o)
{
    const auto r = unequal_four_run(0.25, 16);
    const BoundSpec spec{.which = BoundKind::Nnwr, .h_min = 0.6, .t_final = 2.0, .theta = 0.25};
    double worst = 0.0;
    int checked = 0;
    for (const auto& rec : r.records) {
        if (rec.k == 0)
            continue;
        const double factor = bound_value(spec, rec.k);
        if (!(factor < bound_value(spec, rec.k - 1) && factor < 1.0))
            continue;
        ++checked;
        worst = std::max(worst, rec.error / (factor * r.initial_error()));
    }
    o.require(checked > 0, "at least one iteration with decreasing factor < 1");
    o.require(worst <= 1.10, "error <= 1.10 x factor");
    o.detail << "checked " << checked << " iterates, max error/bound=" << worst << " ";
    for (double theta : {0.1, 0.4}) {
        const auto lin = unequal_four_run(theta, 10);
        std::vector<double> k, le;
        for (std::size_t i = 2; i < lin.records.size(); ++i) {
            k.push_back(lin.records[i].k);
            le.push_back(std::log(lin.records[i].error));
        }
        const double r2 = oracle::fit_line(k, le).r_squared;
        o.require(r2 >= 0.98, "log-linear fit");
        o.detail << "theta=" << theta << " R2=" << r2 << " ";
    }
}

void kernels(Outcome& o)
{
    double worst_laplace = 0.0;
    double worst_integrated = 0.0;
    bool nonnegative = true;
    for (int k : {1, 2, 3})
        for (double alpha : {0.5, 1.0, 2.0}) {
            const KernelSpec ks{k, alpha, 1e-14};
            const auto density = [&](double t) { return t > 0.0 ? kernel_cosech_pow(ks, t) : 0.0; };
            for (double s : {0.5, 1.0, 4.0}) {
                const double exact = std::pow(1.0 / std::sinh(alpha * std::sqrt(s)), k);
                const double got = laplace_quadrature(density, s, 60.0 / s, 1e-10).value;
                worst_laplace = std::max(worst_laplace, std::abs(got / exact - 1.0));
            }
            for (int i = 0; i < 100; ++i) {
                const double t = std::pow(10.0, -3.0 + 5.0 * i / 99.0);
                nonnegative = nonnegative && kernel_cosech_pow(ks, t) >= 0.0;
            }
            for (double t : {0.05, 0.3, 1.0, 4.0, 20.0}) {
                const double exact = integrate(density, 0.0, t, 1e-13);
                const double got = kernel_cosech_pow_integrated(ks, t);
                const double scale = std::max(std::abs(exact), std::numeric_limits<double>::min());
                worst_integrated = std::max(worst_integrated, std::abs(got - exact) / scale);
            }
        }
    o.require(worst_laplace <= 1e-6, "Laplace transform matches cosech^k");
    o.require(nonnegative, "kernel nonnegative");
    o.require(worst_integrated <= 1e-8, "integrated kernel matches quadrature");
    o.detail << "laplace rel=" << worst_laplace << " integrated rel=" << worst_integrated;
}

void duality(Outcome& o)
{
    double worst = 0.0;
    const HeatProblem1D base = model_problem(true);
    const TimeGrid& time = kTime;
    for (End end : {End::Left, End::Right}) {
        const Field1D fd = solve_space_time(base, time);
        const TraceSeries lambda = extract_flux(fd, base, time, end);
        HeatProblem1D pn = base;
        pn.boundary(end) = BoundaryCondition::neumann(lambda);
        const TraceSeries back = solve_space_time(pn, time).trace(end);
        const TraceSeries& g = base.boundary(end).data;
        double diff = 0.0;
        for (std::size_t n = 1; n < g.size(); ++n)
            diff = std::max(diff, std::abs(back[n] - g[n]));
        double scale = max_abs(g);
        for (double v : base.u0)
            scale = std::max(scale, std::abs(v));
        worst = std::max(worst, diff / scale);
    }
    o.require(worst <= 1e-12, "Dirichlet-flux-Neumann round trip");

    const HeatProblem1D model = model_problem(false);
    const Field1D mono = solve_space_time(model, time);
    const DnwrSubproblems sub = split_for_dnwr(model, time, 3.0);
    const TraceSeries ref = mono.trace(static_cast<std::size_t>(sub.interface_node));
    const double dnwr_gap = max_abs_diff(dnwr_iterate(DnwrState{ref, 0, {}}, sub, time, 0.5).h, ref);
    o.require(dnwr_gap <= 1e-10, "DNWR fixed point");

    const HeatProblem1D varied = model_problem(true);
    const Partition p = Partition::build(varied.grid, std::vector<double>{-1.8, -0.5, 1.0});
    const InterfaceState s{interface_traces(solve_space_time(varied, time), p), 0};
    const double nnwr_gap = max_interface_error(nnwr_iterate(s, varied, p, time, 0.25).w, s.w);
    o.require(nnwr_gap <= 1e-10, "NNWR fixed point");
    o.detail << "round trip rel=" << worst << " DNWR gap=" << dnwr_gap << " NNWR gap=" << nnwr_gap;
}

void decoupling_2d(Outcome& o)
{
    const TimeGrid time = TimeGrid::with_step(0.2, 0.004);
    const int n_y = 31;
    const HeatProblem2DStrip prob{SpaceGrid2DStrip(SpaceGrid1D::with_spacing(0.0, 1.0, 0.01), n_y), {}, {}, {}};
    const Partition p = Partition::build(prob.grid.x_grid, std::vector<double>{0.4, 0.75});
    const NnwrConfig cfg{.theta = 0.25, .max_iters = 6, .tol = 0.0, .partition = p};
    const std::vector<Trace2D> zero(2, Trace2D(n_y, time.n_nodes()));

    double worst = 0.0;
    for (int mode : {1, 2, 5}) {
        Trace2D guess(n_y, time.n_nodes());
        for (int j = 0; j < n_y; ++j)
            for (std::size_t n = 0; n < time.n_nodes(); ++n)
                guess.at(j, n) = std::pow(time.time(static_cast<int>(n)), 2) * std::sin(mode * prob.grid.y(j + 1));
        const auto two = nnwr2d_run(cfg, prob, time, {guess, guess}, zero);

        HeatProblem1D one = HeatProblem1D::homogeneous(prob.grid.x_grid, time);
        one.reaction = mode * mode;
        InterfaceState state{std::vector<TraceSeries>(2, t_squared(time)), 0};
        for (auto& w : state.w)
            w[0] = 0.0;
        for (int k = 0; k < cfg.max_iters; ++k)
            state = nnwr_iterate(state, one, p, time, cfg.theta);
        for (std::size_t i = 0; i < 2; ++i)
            for (int j = 0; j < n_y; ++j)
                for (std::size_t n = 0; n < time.n_nodes(); ++n)
                    worst = std::max(worst,
                                     std::abs(two.g[i].at(j, n) - state.w[i][n] * std::sin(mode * prob.grid.y(j + 1))));
    }
    o.require(worst <= 1e-12, "single-mode 2D equals 1D with c = n^2");

    ExperimentConfig strips = figure_configs("nnwr2d").front();
    strips.problem = ProblemSelector::ErrorEquations;
    strips.thetas = {0.25};
    strips.tol = 0.0;
    strips.max_iters = 8;
    const auto report = run_experiment(strips).runs.front();
    const auto& rec = report.records;
    bool superlinear = rec.size() >= 4;
    for (std::size_t k = 2; k < rec.size(); ++k)
        superlinear = superlinear && rec[k].error / rec[k - 1].error < rec[k - 1].error / rec[k - 2].error;
    o.require(superlinear, "contraction ratios shrink");

    const BoundSpec spec{.which = BoundKind::Nnwr2D, .h_min = strips.partition().h_min(), .t_final = 0.2, .theta = 0.25};
    double worst_bound = 0.0;
    int checked = 0;
    for (const auto& r : rec) {
        if (r.k == 0)
            continue;
        const double factor = bound_value(spec, r.k);
        if (!(factor < bound_value(spec, r.k - 1) && factor < 1.0))
            continue;
        ++checked;
        worst_bound = std::max(worst_bound, r.error / (factor * report.initial_error()));
    }
    o.require(checked > 0, "at least one iteration with decreasing factor < 1");
    o.require(worst_bound <= 1.10, "error <= 1.10 x factor");
    o.detail << "mode gap=" << worst << " checked " << checked << " iterates, max error/bound=" << worst_bound;
}

void swr_comparison(Outcome& o)
{
    const ExperimentReport report = run_experiments(figure_configs("swr-compare"));
    std::map<std::string, int> iters;
    for (const auto& run : report.runs) {
        const auto n = run.iterations_to(1e-6);
        o.require(n.has_value(), run.method + " reaches 1e-6");
        iters[run.method] = n.value_or(-1);
    }
    o.require(iters["SWR"] > iters["DNWR"], "SWR slower than DNWR");
    o.require(iters["SWR"] > iters["NNWR"], "SWR slower than NNWR");
    o.detail << "iterations: DNWR=" << iters["DNWR"] << " NNWR=" << iters["NNWR"] << " SWR=" << iters["SWR"];
}

void solver_order(Outcome& o)
{
    std::vector<double> lx, le;
    const TimeGrid t_space(0.5, 50);
    for (int n : {20, 40, 80, 160}) {
        lx.push_back(std::log(2.0 / n));
        le.push_back(std::log(manufactured::max_error(n, t_space, manufactured::linear_in_time())));
    }
    const double spatial = oracle::fit_line(lx, le).slope;

    std::vector<double> lt, lte;
    for (int steps : {10, 20, 40, 80}) {
        const TimeGrid time(1.0, steps);
        lt.push_back(std::log(time.dt()));
        lte.push_back(std::log(manufactured::max_error(2000, time, manufactured::decaying())));
    }
    const double temporal = oracle::fit_line(lt, lte).slope;
    o.require(std::abs(spatial - 2.0) <= 0.1, "spatial slope 2.0 +- 0.1");
    o.require(std::abs(temporal - 1.0) <= 0.1, "temporal slope 1.0 +- 0.1");
    o.detail << "spatial=" << spatial << " temporal=" << temporal;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> checks{
        {"dnwr-equal-subdomains", dnwr_equal_subdomains},
        {"dnwr-dirichlet-larger-bound", dnwr_dirichlet_larger},
        {"dnwr-neumann-larger-bound", dnwr_neumann_larger},
        {"nnwr-four-subdomain-bound", nnwr_four_subdomains},
        {"kernel-validation", kernels},
        {"duality-fixed-points", duality},
        {"nnwr2d-decoupling", decoupling_2d},
        {"swr-comparison", swr_comparison},
        {"solver-order", solver_order},
    };
    int failures = 0;
    for (const auto& [name, check] : checks) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            check(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.str().c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
