#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wrlab {

/// Uniform time grid on [0, T]; node j sits at j*dt for j = 0..n_steps.
class TimeGrid {
public:
    TimeGrid(double t_final, int n_steps);

    /// Builds a grid from a step size; dt must divide T up to round-off.
    static TimeGrid with_step(double t_final, double dt);

    double t_final() const noexcept { return t_final_; }
    int n_steps() const noexcept { return n_steps_; }
    std::size_t n_nodes() const noexcept { return static_cast<std::size_t>(n_steps_) + 1; }
    double dt() const noexcept { return t_final_ / n_steps_; }
    double time(int j) const noexcept { return t_final_ * j / n_steps_; }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

private:
    double t_final_;
    int n_steps_;
};

/// Uniform 1D grid; node i sits at x_left + i*dx for i = 0..n_cells.
class SpaceGrid1D {
public:
    SpaceGrid1D(double x_left, double x_right, int n_cells);

    /// Builds a grid from a spacing; dx must divide the width up to round-off.
    static SpaceGrid1D with_spacing(double x_left, double x_right, double dx);

    double x_left() const noexcept { return x_left_; }
    double x_right() const noexcept { return x_right_; }
    int n_cells() const noexcept { return n_cells_; }
    std::size_t n_nodes() const noexcept { return static_cast<std::size_t>(n_cells_) + 1; }
    double width() const noexcept { return x_right_ - x_left_; }
    double dx() const noexcept { return width() / n_cells_; }
    double x(int i) const noexcept;
    /// Cell midpoint between nodes i and i+1.
    double midpoint(int i) const noexcept { return x(i) + 0.5 * dx(); }

    /// Index of the node closest to x (not clamped).
    long nearest_node(double x) const noexcept;

    /// Grid restricted to the global nodes first..last (inclusive).
    SpaceGrid1D sub_grid(int first, int last) const;

    friend bool operator==(const SpaceGrid1D&, const SpaceGrid1D&) = default;

private:
    double x_left_;
    double x_right_;
    int n_cells_;
};

/// Global node indices [first, last] owned by one subdomain (inclusive).
struct IndexRange {
    int first = 0;
    int last = 0;

    int size() const noexcept { return last - first + 1; }
    bool contains(int i) const noexcept { return i >= first && i <= last; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Non-overlapping decomposition x_0 < x_1 < ... < x_N of a SpaceGrid1D into
/// N subdomains. Interfaces are always grid nodes.
class Partition {
public:
    /// Snaps each interior coordinate to its nearest grid node.
    /// Throws NonMonotone, OutsideDomain or DegenerateSubdomain.
    static Partition build(const SpaceGrid1D& grid, std::span<const double> interior_interfaces);

    /// Partition from consecutive subdomain widths (must sum to the grid width).
    static Partition from_widths(const SpaceGrid1D& grid, std::span<const double> widths);

    const SpaceGrid1D& grid() const noexcept { return grid_; }
    int n_subdomains() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
    int n_interfaces() const noexcept { return n_subdomains() - 1; }

    /// x_0..x_N including the physical ends.
    std::span<const double> coordinates() const noexcept { return coords_; }
    /// Global node index of x_0..x_N.
    std::span<const int> nodes() const noexcept { return nodes_; }

    /// Global node of interior interface j (0-based, between subdomains j and j+1).
    int interface_node(int j) const;
    double interface_coordinate(int j) const;

    /// Width of subdomain i (0-based).
    double width(int i) const;
    std::vector<double> widths() const;
    double h_min() const noexcept { return h_min_; }

    /// Waveform relaxation needs at least two subdomains.
    bool supports_iteration() const noexcept { return n_subdomains() >= 2; }

    /// Global node range of subdomain i (0-based); throws IndexOutOfRange.
    IndexRange local_range(int i) const;

private:
    Partition(SpaceGrid1D grid, std::vector<int> nodes);

    SpaceGrid1D grid_;
    std::vector<int> nodes_;
    std::vector<double> coords_;
    double h_min_ = 0.0;
};

/// Node range of subdomain i (0-based) in `grid`; the grid must be the one
/// the partition was built on.
IndexRange local_index_map(const Partition& partition, const SpaceGrid1D& grid, int i);

/// Strip decomposition grid on (x_0, x_N) x (0, pi). The y direction holds
/// n_y interior nodes y_j = j*pi/(n_y+1); the Dirichlet rows y = 0 and y = pi
/// are implicit.
struct SpaceGrid2DStrip {
    SpaceGrid1D x_grid;
    int n_y;

    SpaceGrid2DStrip(SpaceGrid1D x, int n_y_interior);

    double dy() const noexcept;
    double y(int j) const noexcept;
};

}  // namespace wrlab
