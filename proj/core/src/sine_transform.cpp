#include "wrlab/sine_transform.hpp"

#include <cmath>
#include <numbers>

#include "wrlab/error.hpp"

namespace wrlab {

SineTransform::SineTransform(int n) : n_(n)
{
    if (n < 1)
        fail(Errc::InvalidArgument, "SineTransform: size must be positive");
    const auto nn = static_cast<std::size_t>(n);
    sines_.resize(nn * nn);
    const double dy = std::numbers::pi / (n + 1);
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= n; ++j)
            sines_[static_cast<std::size_t>(m - 1) * nn + static_cast<std::size_t>(j - 1)] =
                std::sin(m * j * dy);
}

void SineTransform::forward(std::span<const double> values, std::span<double> coeffs) const
{
    if (values.size() != static_cast<std::size_t>(n_) || coeffs.size() != values.size())
        fail(Errc::InvalidArgument, "SineTransform::forward: size mismatch");
    const double scale = 2.0 / (n_ + 1);
    for (int m = 1; m <= n_; ++m) {
        double sum = 0.0;
        for (int j = 1; j <= n_; ++j)
            sum += values[static_cast<std::size_t>(j - 1)] * basis(m, j);
        coeffs[static_cast<std::size_t>(m - 1)] = scale * sum;
    }
}

void SineTransform::inverse(std::span<const double> coeffs, std::span<double> values) const
{
    if (coeffs.size() != static_cast<std::size_t>(n_) || values.size() != coeffs.size())
        fail(Errc::InvalidArgument, "SineTransform::inverse: size mismatch");
    for (int j = 1; j <= n_; ++j) {
        double sum = 0.0;
        for (int m = 1; m <= n_; ++m)
            sum += coeffs[static_cast<std::size_t>(m - 1)] * basis(m, j);
        values[static_cast<std::size_t>(j - 1)] = sum;
    }
}

}  // namespace wrlab
