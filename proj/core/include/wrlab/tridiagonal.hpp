#pragma once

#include <span>
#include <vector>

namespace wrlab {

/// LU factorization of a tridiagonal matrix by the Thomas algorithm, without
/// pivoting. Only valid for diagonally dominant systems; the heat operators
/// assembled in heat.cpp always are.
///
/// Row i reads lower[i]*x[i-1] + diag[i]*x[i] + upper[i]*x[i+1]; lower[0] and
/// upper[n-1] are ignored.
class TridiagonalLu {
public:
    TridiagonalLu() = default;
    TridiagonalLu(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper);

    std::size_t size() const noexcept { return pivot_inv_.size(); }

    /// Overwrites rhs with the solution.
    void solve_in_place(std::span<double> rhs) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_prime_;
    std::vector<double> pivot_inv_;
};

}  // namespace wrlab
