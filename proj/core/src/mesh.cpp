#include "wrlab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wrlab/error.hpp"

namespace wrlab {

namespace {

constexpr double kAlignTol = 1e-9;

int count_steps(double length, double step, const char* what)
{
    if (!(length > 0.0) || !(step > 0.0))
        fail(Errc::InvalidArgument, std::string(what) + ": length and step must be positive");
    const double ratio = length / step;
    const double n = std::round(ratio);
    if (n < 1.0 || std::abs(ratio - n) > kAlignTol * std::max(1.0, ratio)) {
        std::ostringstream os;
        os << what << ": step " << step << " does not divide length " << length;
        fail(Errc::InvalidArgument, os.str());
    }
    return static_cast<int>(n);
}

}  // namespace

TimeGrid::TimeGrid(double t_final, int n_steps) : t_final_(t_final), n_steps_(n_steps)
{
    if (!(t_final > 0.0))
        fail(Errc::InvalidArgument, "TimeGrid: T must be positive");
    if (n_steps < 1)
        fail(Errc::InvalidArgument, "TimeGrid: need at least one step");
}

TimeGrid TimeGrid::with_step(double t_final, double dt)
{
    return TimeGrid(t_final, count_steps(t_final, dt, "TimeGrid"));
}

SpaceGrid1D::SpaceGrid1D(double x_left, double x_right, int n_cells)
    : x_left_(x_left), x_right_(x_right), n_cells_(n_cells)
{
    if (!(x_right > x_left))
        fail(Errc::InvalidArgument, "SpaceGrid1D: need x_left < x_right");
    if (n_cells < 1)
        fail(Errc::InvalidArgument, "SpaceGrid1D: need at least one cell");
}

SpaceGrid1D SpaceGrid1D::with_spacing(double x_left, double x_right, double dx)
{
    return SpaceGrid1D(x_left, x_right, count_steps(x_right - x_left, dx, "SpaceGrid1D"));
}

double SpaceGrid1D::x(int i) const noexcept
{
    // Pin the right end exactly so sub-grids keep exact endpoints.
    if (i == n_cells_)
        return x_right_;
    return x_left_ + width() * i / n_cells_;
}

long SpaceGrid1D::nearest_node(double xv) const noexcept
{
    return std::lround((xv - x_left_) / dx());
}

SpaceGrid1D SpaceGrid1D::sub_grid(int first, int last) const
{
    if (first < 0 || last > n_cells_ || last <= first)
        fail(Errc::IndexOutOfRange, "SpaceGrid1D::sub_grid: bad node range");
    return SpaceGrid1D(x(first), x(last), last - first);
}

Partition::Partition(SpaceGrid1D grid, std::vector<int> nodes)
    : grid_(grid), nodes_(std::move(nodes))
{
    coords_.reserve(nodes_.size());
    for (int n : nodes_)
        coords_.push_back(grid_.x(n));
    h_min_ = grid_.width();
    for (int i = 0; i < n_subdomains(); ++i)
        h_min_ = std::min(h_min_, width(i));
}

Partition Partition::build(const SpaceGrid1D& grid, std::span<const double> interior)
{
    std::vector<int> nodes;
    nodes.reserve(interior.size() + 2);
    nodes.push_back(0);
    for (std::size_t j = 0; j < interior.size(); ++j) {
        const double xj = interior[j];
        if (j > 0 && !(xj > interior[j - 1]))
            fail(Errc::NonMonotone, "Partition: interfaces must be strictly increasing");
        if (!(xj > grid.x_left() && xj < grid.x_right())) {
            std::ostringstream os;
            os << "Partition: interface " << xj << " not inside (" << grid.x_left() << ", "
               << grid.x_right() << ")";
            fail(Errc::OutsideDomain, os.str());
        }
        const int node = static_cast<int>(grid.nearest_node(xj));
        if (node <= nodes.back() || node >= grid.n_cells()) {
            std::ostringstream os;
            os << "Partition: interface " << xj << " snaps to node " << node
               << " leaving a zero-width subdomain";
            fail(Errc::DegenerateSubdomain, os.str());
        }
        nodes.push_back(node);
    }
    nodes.push_back(grid.n_cells());
    return Partition(grid, std::move(nodes));
}

Partition Partition::from_widths(const SpaceGrid1D& grid, std::span<const double> widths)
{
    if (widths.empty())
        fail(Errc::InvalidArgument, "Partition: need at least one width");
    double total = 0.0;
    std::vector<double> interior;
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
        total += widths[i];
        interior.push_back(grid.x_left() + total);
    }
    total += widths.back();
    if (std::abs(total - grid.width()) > 0.5 * grid.dx())
        fail(Errc::InvalidArgument, "Partition: widths do not sum to the domain width");
    return build(grid, interior);
}

int Partition::interface_node(int j) const
{
    if (j < 0 || j >= n_interfaces())
        fail(Errc::IndexOutOfRange, "Partition: interface index out of range");
    return nodes_[static_cast<std::size_t>(j) + 1];
}

double Partition::interface_coordinate(int j) const
{
    return grid_.x(interface_node(j));
}

double Partition::width(int i) const
{
    if (i < 0 || i >= n_subdomains())
        fail(Errc::IndexOutOfRange, "Partition: subdomain index out of range");
    const auto k = static_cast<std::size_t>(i);
    return grid_.dx() * (nodes_[k + 1] - nodes_[k]);
}

std::vector<double> Partition::widths() const
{
    std::vector<double> out;
    for (int i = 0; i < n_subdomains(); ++i)
        out.push_back(width(i));
    return out;
}

IndexRange Partition::local_range(int i) const
{
    if (i < 0 || i >= n_subdomains())
        fail(Errc::IndexOutOfRange, "Partition: subdomain index out of range");
    const auto k = static_cast<std::size_t>(i);
    return {nodes_[k], nodes_[k + 1]};
}

IndexRange local_index_map(const Partition& partition, const SpaceGrid1D& grid, int i)
{
    if (!(partition.grid() == grid))
        fail(Errc::InvalidArgument, "local_index_map: grid does not match the partition");
    return partition.local_range(i);
}

SpaceGrid2DStrip::SpaceGrid2DStrip(SpaceGrid1D x, int n_y_interior) : x_grid(x), n_y(n_y_interior)
{
    if (n_y < 1)
        fail(Errc::InvalidArgument, "SpaceGrid2DStrip: need at least one interior y node");
}

double SpaceGrid2DStrip::dy() const noexcept
{
    return std::numbers::pi / (n_y + 1);
}

double SpaceGrid2DStrip::y(int j) const noexcept
{
    return j * dy();
}

}  // namespace wrlab
