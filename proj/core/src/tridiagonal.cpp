#include "wrlab/tridiagonal.hpp"

#include <cassert>

#include "wrlab/error.hpp"

namespace wrlab {

TridiagonalLu::TridiagonalLu(std::vector<double> lower, std::vector<double> diag,
                             std::vector<double> upper)
    : lower_(std::move(lower))
{
    const std::size_t n = diag.size();
    if (n == 0 || lower_.size() != n || upper.size() != n)
        fail(Errc::InvalidArgument, "TridiagonalLu: inconsistent band sizes");

    upper_prime_.resize(n, 0.0);
    pivot_inv_.resize(n);
    double pivot = diag[0];
    for (std::size_t i = 0;; ++i) {
        assert(pivot != 0.0 && "singular tridiagonal system");
        pivot_inv_[i] = 1.0 / pivot;
        if (i + 1 == n)
            break;
        upper_prime_[i] = upper[i] * pivot_inv_[i];
        pivot = diag[i + 1] - lower_[i + 1] * upper_prime_[i];
    }
}

void TridiagonalLu::solve_in_place(std::span<double> x) const
{
    const std::size_t n = pivot_inv_.size();
    assert(x.size() == n);

    // Forward sweep
    x[0] *= pivot_inv_[0];
    for (std::size_t i = 1; i < n; ++i)
        x[i] = (x[i] - lower_[i] * x[i - 1]) * pivot_inv_[i];

    // Back substitution
    for (std::size_t i = n - 1; i > 0; --i)
        x[i - 1] -= upper_prime_[i - 1] * x[i];
}

}  // namespace wrlab
