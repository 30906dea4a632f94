#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wrlab/mesh.hpp"
#include "wrlab/trace.hpp"
#include "wrlab/tridiagonal.hpp"

namespace wrlab {

enum class BcKind { Dirichlet, Neumann };
enum class End { Left, Right };

/// Dirichlet data is the boundary value; Neumann data is the outward flux
/// lambda(t) = kappa * du/dn. Data is read at time nodes 1..n_steps; the value
/// at node 0 is ignored because the field at t = 0 is always u0.
struct BoundaryCondition {
    BcKind kind = BcKind::Dirichlet;
    TraceSeries data;

    static BoundaryCondition dirichlet(TraceSeries values);
    static BoundaryCondition neumann(TraceSeries outward_flux);
};

/// du/dt - d/dx(kappa du/dx) + c u = f on one grid, backward Euler in time.
struct HeatProblem1D {
    SpaceGrid1D grid;
    std::vector<double> kappa;  ///< one value per cell, sampled at the midpoint
    double reaction = 0.0;      ///< c >= 0
    std::vector<double> source; ///< empty means f = 0; else row-major (time node, space node)
    std::vector<double> u0;     ///< one value per space node
    BoundaryCondition left;
    BoundaryCondition right;

    /// kappa = 1, no reaction, zero data, homogeneous Dirichlet on both ends.
    static HeatProblem1D homogeneous(const SpaceGrid1D& grid, const TimeGrid& time);

    /// Throws InvalidArgument when shapes or coefficients are inconsistent.
    void validate(const TimeGrid& time) const;

    double source_at(std::size_t n, std::size_t i) const noexcept
    {
        return source.empty() ? 0.0 : source[n * grid.n_nodes() + i];
    }

    const BoundaryCondition& boundary(End end) const noexcept { return end == End::Left ? left : right; }
    BoundaryCondition& boundary(End end) noexcept { return end == End::Left ? left : right; }
};

std::vector<double> sample_kappa(const SpaceGrid1D& grid, const std::function<double(double)>& kappa);
std::vector<double> sample_nodes(const SpaceGrid1D& grid, const std::function<double(double)>& f);
/// Row-major (time node, space node) samples of f(x, t).
std::vector<double> sample_source(const SpaceGrid1D& grid, const TimeGrid& time,
                                  const std::function<double(double, double)>& f);

/// Copy of the coefficients and data of `global` restricted to the node range,
/// with the given boundary conditions on the two ends.
HeatProblem1D restrict_problem(const HeatProblem1D& global, IndexRange range,
                               BoundaryCondition left, BoundaryCondition right);

/// Space-time field u(n, i); row 0 is u0.
class Field1D {
public:
    Field1D() = default;
    Field1D(std::size_t n_time, std::size_t n_space);

    std::size_t n_time() const noexcept { return n_time_; }
    std::size_t n_space() const noexcept { return n_space_; }

    double& at(std::size_t n, std::size_t i) { return data_[n * n_space_ + i]; }
    double at(std::size_t n, std::size_t i) const { return data_[n * n_space_ + i]; }

    std::span<double> row(std::size_t n) { return {data_.data() + n * n_space_, n_space_}; }
    std::span<const double> row(std::size_t n) const { return {data_.data() + n * n_space_, n_space_}; }

    /// Time series at space node i.
    TraceSeries trace(std::size_t i) const;
    TraceSeries trace(End end) const { return trace(end == End::Left ? 0 : n_space_ - 1); }

    friend bool operator==(const Field1D&, const Field1D&) = default;

private:
    std::size_t n_time_ = 0;
    std::size_t n_space_ = 0;
    std::vector<double> data_;
};

/// Backward-Euler step operator for one problem and step size. The matrix
/// (I/dt + A) is factored once; each step is one forward/back substitution.
///
/// Interior rows use the centered stencil
///   (u_i - u_i')/dt - [k+(u_{i+1} - u_i) - k-(u_i - u_{i-1})]/dx^2 + c u_i = f_i.
/// A Neumann end b with inner neighbour b' uses the half-cell balance
///   (dx/2)(u_b - u_b')/dt + k(u_b - u_b')/dx + c (dx/2) u_b = lambda + (dx/2) f_b,
/// the same relation extract_flux() inverts.
class HeatStepper {
public:
    HeatStepper(const HeatProblem1D& problem, const TimeGrid& time);

    /// Advances u_prev (time node n-1) to time node n, 1 <= n <= n_steps.
    void step(std::span<const double> u_prev, int n, std::span<double> u_next) const;

private:
    const HeatProblem1D* problem_;
    double dt_;
    double dx_;
    TridiagonalLu lu_;
};

std::vector<double> step_backward_euler(const HeatProblem1D& problem, const TimeGrid& time,
                                        std::span<const double> u_prev, int n);

/// Marches all time steps and returns the full field.
Field1D solve_space_time(const HeatProblem1D& problem, const TimeGrid& time);

/// Outward boundary flux lambda^n at `end` that makes the half-cell balance
/// hold exactly for `field`. Feeding it back as a Neumann condition reproduces
/// the field. Entry 0 is set to 0. Throws WrongBCKind if `end` is Neumann.
TraceSeries extract_flux(const Field1D& field, const HeatProblem1D& problem, const TimeGrid& time,
                         End end);

}  // namespace wrlab
