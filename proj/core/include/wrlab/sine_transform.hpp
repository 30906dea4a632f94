#pragma once

#include <span>
#include <vector>

namespace wrlab {

/// Discrete sine transform on the interior nodes y_j = j*pi/(n+1), j = 1..n:
///   forward:  c_m = 2/(n+1) * sum_j v_j sin(m y_j)
///   inverse:  v_j = sum_m c_m sin(m y_j)
/// The pair is exact (up to round-off) and c_m approximates the Fourier sine
/// coefficient of mode m. Stored as a dense n x n matrix; an FFT-based DST
/// can replace it behind the same interface.
class SineTransform {
public:
    explicit SineTransform(int n);

    int size() const noexcept { return n_; }

    void forward(std::span<const double> values, std::span<double> coeffs) const;
    void inverse(std::span<const double> coeffs, std::span<double> values) const;

    /// sin(m y_j) for mode m = 1..n and node j = 1..n.
    double basis(int m, int j) const noexcept
    {
        return sines_[static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(j - 1)];
    }

private:
    int n_;
    std::vector<double> sines_;
};

}  // namespace wrlab
