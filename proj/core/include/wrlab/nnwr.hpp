#pragma once

#include <span>
#include <vector>

#include "wrlab/heat.hpp"
#include "wrlab/mesh.hpp"
#include "wrlab/report.hpp"
#include "wrlab/trace.hpp"

namespace wrlab {

/// Multi-subdomain Neumann-Neumann waveform relaxation in 1D.
struct NnwrConfig {
    double theta = 0.25;
    int max_iters = 30;
    double tol = 1e-12;
    Partition partition;

    void validate() const;
};

/// Interface traces w_j^k, one per interior interface (N - 1 of them).
struct InterfaceState {
    std::vector<TraceSeries> w;
    int k = 0;
};

struct DirichletSweep {
    std::vector<HeatProblem1D> problems;
    std::vector<Field1D> fields;
    /// Outward fluxes at the interface ends; entries at physical ends are empty.
    std::vector<TraceSeries> left_flux;
    std::vector<TraceSeries> right_flux;
};

/// Dirichlet solves on every subdomain with the physical data of `global` on
/// the outer ends and w on the interfaces. Subdomains run through
/// parallel_for; `threads` is forwarded to it.
DirichletSweep dirichlet_sweep(const InterfaceState& state, const HeatProblem1D& global,
                               const Partition& partition, const TimeGrid& time, int threads = 0);

/// Sum of the two outward fluxes at interface j (the flux jump).
std::vector<TraceSeries> flux_jumps(const DirichletSweep& sweep);

/// Correction solves psi_i: zero initial value and source, the jump as outward
/// flux on every interface end, homogeneous data of the physical kind on the
/// outer ends of the first and last subdomain.
std::vector<Field1D> neumann_sweep(const DirichletSweep& sweep, const HeatProblem1D& global,
                                   const Partition& partition, const TimeGrid& time, int threads = 0);

/// Correction values seen at interface j from both sides.
struct InterfacePsi {
    TraceSeries from_left;   ///< psi_j at its right end
    TraceSeries from_right;  ///< psi_{j+1} at its left end
};

std::vector<InterfacePsi> interface_psi(std::span<const Field1D> psi);

/// w_j^k = w_j^{k-1} - theta * (psi_j + psi_{j+1}) at x_j.
InterfaceState nnwr_update(const InterfaceState& state, std::span<const InterfacePsi> psi, double theta);

InterfaceState nnwr_iterate(const InterfaceState& state, const HeatProblem1D& global,
                            const Partition& partition, const TimeGrid& time, double theta,
                            int threads = 0);

/// Interface traces of a solution field defined on the partition's grid.
std::vector<TraceSeries> interface_traces(const Field1D& field, const Partition& partition);

/// Iterates until max_j ||w_j^k - reference_j||_inf <= tol or max_iters. The
/// t = 0 samples of the guesses are pinned to u0.
IterationReport nnwr_run(const NnwrConfig& config, const HeatProblem1D& global, const TimeGrid& time,
                         std::vector<TraceSeries> initial_guesses,
                         const std::vector<TraceSeries>& reference, int threads = 0);

double max_interface_error(std::span<const TraceSeries> w, std::span<const TraceSeries> reference);

}  // namespace wrlab
