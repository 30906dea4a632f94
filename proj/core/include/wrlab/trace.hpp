#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wrlab/mesh.hpp"

namespace wrlab {

/// Values of an interface or boundary quantity at every node of a TimeGrid
/// (index 0 is t = 0).
struct TraceSeries {
    std::vector<double> values;

    TraceSeries() = default;
    explicit TraceSeries(std::vector<double> v) : values(std::move(v)) {}

    static TraceSeries zeros(const TimeGrid& grid);
    static TraceSeries constant(const TimeGrid& grid, double value);
    static TraceSeries sample(const TimeGrid& grid, const std::function<double(double)>& f);

    std::size_t size() const noexcept { return values.size(); }
    double& operator[](std::size_t n) { return values[n]; }
    double operator[](std::size_t n) const { return values[n]; }
    std::span<const double> span() const noexcept { return values; }

    friend bool operator==(const TraceSeries&, const TraceSeries&) = default;
};

/// L-infinity norm over all time nodes.
double max_abs(const TraceSeries& s);
double max_abs_diff(const TraceSeries& a, const TraceSeries& b);

/// Traces on a y x t array: value(j, n) for interior y node j and time node n.
class Trace2D {
public:
    Trace2D() = default;
    Trace2D(int n_y, std::size_t n_time);

    int n_y() const noexcept { return n_y_; }
    std::size_t n_time() const noexcept { return n_time_; }

    double& at(int j, std::size_t n) { return data_[index(j, n)]; }
    double at(int j, std::size_t n) const { return data_[index(j, n)]; }

    /// Time series at y node j.
    std::span<double> row(int j);
    std::span<const double> row(int j) const;

    friend bool operator==(const Trace2D&, const Trace2D&) = default;

private:
    std::size_t index(int j, std::size_t n) const noexcept
    {
        return static_cast<std::size_t>(j) * n_time_ + n;
    }

    int n_y_ = 0;
    std::size_t n_time_ = 0;
    std::vector<double> data_;
};

/// max over t of sqrt(dy * sum_j (a - b)^2): discrete L-inf(0,T; L2(0,pi)).
double linf_l2_diff(const Trace2D& a, const Trace2D& b, double dy);
double linf_l2(const Trace2D& a, double dy);

}  // namespace wrlab
