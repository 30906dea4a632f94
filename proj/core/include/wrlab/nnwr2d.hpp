#pragma once

#include <span>
#include <vector>

#include "wrlab/heat.hpp"
#include "wrlab/mesh.hpp"
#include "wrlab/nnwr.hpp"
#include "wrlab/report.hpp"
#include "wrlab/sine_transform.hpp"
#include "wrlab/trace.hpp"

namespace wrlab {

/// u_t - (u_xx + u_yy) = 0 on (x_0, x_N) x (0, pi) with homogeneous Dirichlet
/// rows at y = 0 and y = pi. Arrays index interior y nodes j = 0..n_y-1,
/// which sit at y_{j+1}.
struct HeatProblem2DStrip {
    SpaceGrid2DStrip grid;
    std::vector<double> u0;  ///< empty means zero; else u0[i * n_y + j]
    Trace2D left;            ///< Dirichlet data on x = x_0; empty shape means zero
    Trace2D right;           ///< Dirichlet data on x = x_N; empty shape means zero

    void validate(const TimeGrid& time) const;
};

/// Sine coefficients of every y row of a 2D trace; entry m-1 is mode m.
std::vector<TraceSeries> to_modes(const Trace2D& trace, const SineTransform& dst);
Trace2D from_modes(std::span<const TraceSeries> modes, const SineTransform& dst);

/// 1D problem for sine mode m: kappa = 1, reaction m^2, projected data.
HeatProblem1D mode_problem(const HeatProblem2DStrip& problem, const TimeGrid& time,
                           const SineTransform& dst, int mode);

/// Interface traces of the undecomposed discrete solution (one mode-wise
/// monolithic solve per sine mode, transformed back).
std::vector<Trace2D> monolithic_interface_traces_2d(const HeatProblem2DStrip& problem,
                                                    const Partition& partition,
                                                    const TimeGrid& time, int threads = 0);

struct Nnwr2dResult {
    IterationReport report;
    std::vector<Trace2D> g;  ///< final interface traces
};

/// NNWR on x-strips. Every interface trace is sine-transformed in y, each mode
/// runs the 1D NNWR iteration with reaction m^2, and the traces are
/// transformed back after every iteration to measure
/// max_j ||g_j^k - reference_j||_{L-inf(0,T; L2(0,pi))}.
Nnwr2dResult nnwr2d_run(const NnwrConfig& config, const HeatProblem2DStrip& problem,
                        const TimeGrid& time, const std::vector<Trace2D>& initial_guesses,
                        const std::vector<Trace2D>& reference, int threads = 0);

}  // namespace wrlab
