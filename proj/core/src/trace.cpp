#include "wrlab/trace.hpp"

#include <algorithm>
#include <cmath>

#include "wrlab/error.hpp"

namespace wrlab {

TraceSeries TraceSeries::zeros(const TimeGrid& grid)
{
    return constant(grid, 0.0);
}

TraceSeries TraceSeries::constant(const TimeGrid& grid, double value)
{
    return TraceSeries(std::vector<double>(grid.n_nodes(), value));
}

TraceSeries TraceSeries::sample(const TimeGrid& grid, const std::function<double(double)>& f)
{
    std::vector<double> v(grid.n_nodes());
    for (int n = 0; n <= grid.n_steps(); ++n)
        v[static_cast<std::size_t>(n)] = f(grid.time(n));
    return TraceSeries(std::move(v));
}

double max_abs(const TraceSeries& s)
{
    double m = 0.0;
    for (double v : s.values)
        m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const TraceSeries& a, const TraceSeries& b)
{
    if (a.size() != b.size())
        fail(Errc::InvalidArgument, "max_abs_diff: trace lengths differ");
    double m = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n)
        m = std::max(m, std::abs(a[n] - b[n]));
    return m;
}

Trace2D::Trace2D(int n_y, std::size_t n_time)
    : n_y_(n_y), n_time_(n_time), data_(static_cast<std::size_t>(n_y) * n_time, 0.0)
{
    if (n_y < 1 || n_time < 1)
        fail(Errc::InvalidArgument, "Trace2D: empty shape");
}

std::span<double> Trace2D::row(int j)
{
    return std::span<double>(data_).subspan(index(j, 0), n_time_);
}

std::span<const double> Trace2D::row(int j) const
{
    return std::span<const double>(data_).subspan(index(j, 0), n_time_);
}

double linf_l2_diff(const Trace2D& a, const Trace2D& b, double dy)
{
    if (a.n_y() != b.n_y() || a.n_time() != b.n_time())
        fail(Errc::InvalidArgument, "linf_l2_diff: shapes differ");
    double worst = 0.0;
    for (std::size_t n = 0; n < a.n_time(); ++n) {
        double sum = 0.0;
        for (int j = 0; j < a.n_y(); ++j) {
            const double d = a.at(j, n) - b.at(j, n);
            sum += d * d;
        }
        worst = std::max(worst, std::sqrt(dy * sum));
    }
    return worst;
}

double linf_l2(const Trace2D& a, double dy)
{
    double worst = 0.0;
    for (std::size_t n = 0; n < a.n_time(); ++n) {
        double sum = 0.0;
        for (int j = 0; j < a.n_y(); ++j)
            sum += a.at(j, n) * a.at(j, n);
        worst = std::max(worst, std::sqrt(dy * sum));
    }
    return worst;
}

}  // namespace wrlab
