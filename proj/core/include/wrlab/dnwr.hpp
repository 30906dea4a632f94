#pragma once

#include <vector>

#include "wrlab/heat.hpp"
#include "wrlab/mesh.hpp"
#include "wrlab/report.hpp"
#include "wrlab/trace.hpp"

namespace wrlab {

/// Two-subdomain Dirichlet-Neumann waveform relaxation on (x_L, x_L + a + b).
/// The left part (width a) always takes the Dirichlet step, the right part
/// (width b) the Neumann step.
struct DnwrConfig {
    double theta = 0.5;
    int max_iters = 30;
    double tol = 1e-12;  ///< absolute L-inf error against the reference trace
    double a = 0.0;
    double b = 0.0;

    void validate(const SpaceGrid1D& grid) const;
};

struct DnwrSubproblems {
    HeatProblem1D dirichlet_side;  ///< interface at its right end
    HeatProblem1D neumann_side;    ///< interface at its left end
    int interface_node = 0;        ///< global node of the interface
};

/// Cuts the global problem at x_L + a. The interface boundary data of the
/// two pieces is a placeholder overwritten on every sweep.
DnwrSubproblems split_for_dnwr(const HeatProblem1D& global, const TimeGrid& time, double a);

struct DnwrState {
    TraceSeries h;                ///< interface guess h^k
    int k = 0;
    std::vector<double> history;  ///< error after each iteration, filled by dnwr_run
};

struct DnwrSweep {
    Field1D dirichlet_field;
    TraceSeries interface_flux;  ///< outward flux of the Dirichlet side at the interface
    Field1D neumann_field;
    TraceSeries neumann_trace;   ///< Neumann-side value at the interface
};

/// Dirichlet solve with trace h, flux transfer, Neumann solve.
DnwrSweep dnwr_sweep(const TraceSeries& h, const DnwrSubproblems& sub, const TimeGrid& time);

/// One DNWR iteration: h^k = theta * u_2|interface + (1 - theta) * h^{k-1}.
DnwrState dnwr_iterate(const DnwrState& state, const DnwrSubproblems& sub, const TimeGrid& time,
                       double theta);

/// Iterates until the L-inf error against `reference` is <= tol or max_iters
/// is reached. Record k = 0 holds the initial error. The t = 0 sample of the
/// guess is pinned to u0 at the interface.
IterationReport dnwr_run(const DnwrConfig& config, const HeatProblem1D& global, const TimeGrid& time,
                         const TraceSeries& initial_guess, const TraceSeries& reference);

}  // namespace wrlab
