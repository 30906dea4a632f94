#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace wrlab {

enum class BoundKind {
    EqualSubdomains,            ///< DNWR, a = b: |1 - 2 theta|^k
    DirichletLargerLinear,      ///< DNWR, a > b, infinite horizon: ((a-b)/(2a))^k
    DirichletLargerSuperlinear, ///< DNWR, a > b, finite T: ((a-b)/a)^k erfc(kb/(2 sqrt T))
    NeumannLargerLinear,        ///< DNWR, a < b, iteration 2k: ((b-a)/(2a))^{2k}
    NeumannLargerSuperlinear,   ///< DNWR, a < b, iteration 2k: (sqrt2/(1-e^{-(2k+1)a^2/T}))^{2k} e^{-k^2 a^2/T}
    Nnwr,                       ///< NNWR, theta = 1/4: (sqrt6/(1-e^{-(2k+1)h^2/T}))^{2k} e^{-k^2 h^2/T}
    Nnwr2D,                     ///< same factor for strips, L-inf(0,T; L2) norm
};

std::string_view to_string(BoundKind kind);
/// Accepts the names printed by to_string(); throws InvalidArgument otherwise.
BoundKind parse_bound_kind(std::string_view name);

/// Parameters of one convergence estimate. Lengths a (Dirichlet side) and b
/// (Neumann side) are used by the DNWR kinds, h_min by the NNWR kinds.
struct BoundSpec {
    BoundKind which = BoundKind::EqualSubdomains;
    double a = 0.0;
    double b = 0.0;
    double h_min = 0.0;
    double t_final = 0.0;
    double theta = 0.5;

    /// Throws ParameterMismatch if a required parameter is missing or
    /// inconsistent with `which` (e.g. DirichletLarger* with a <= b).
    void validate() const;

    /// True for the Neumann-larger kinds, whose index counts pairs of iterations.
    bool indexes_even_iterations() const noexcept;
};

/// Multiplicative factor on the initial error after k iterations. For the
/// NeumannLarger kinds, k counts double iterations: the value bounds
/// iteration 2k.
double bound_value(const BoundSpec& spec, int k);

/// Bound for iteration number `iteration`, mapping to the half index for the
/// NeumannLarger kinds; nullopt for odd iterations there.
std::optional<double> bound_for_iteration(const BoundSpec& spec, int iteration);

/// Unique positive root of a^4 + sqrt(2) a - 1 (about 0.6095).
double superlinear_alpha0();

/// Iteration count beyond which the a < b DNWR estimate contracts
/// superlinearly: ceil(0.99 T / a^2). Returns 0 for T = 0.
int superlinear_onset(double a, double t_final);

/// Series for the inverse Laplace transforms of cosech^k(alpha sqrt s) and
/// cosech^k(alpha sqrt s)/s.
struct KernelSpec {
    int k = 1;
    double alpha = 1.0;
    double truncation_tol = 1e-14;

    void validate() const;
};

/// 2^k sum_m C(m+k-1, m) (2m+k) alpha / sqrt(4 pi t^3) exp(-(2m+k)^2 alpha^2 / (4t)).
/// Throws NonPositiveTime for t <= 0.
double kernel_cosech_pow(const KernelSpec& spec, double t);

/// 2^k sum_m C(m+k-1, m) erfc((2m+k) alpha / (2 sqrt t)); 0 at t = 0.
double kernel_cosech_pow_integrated(const KernelSpec& spec, double t);

double erfc(double x);

/// Adaptive Gauss-Kronrod (7/15) integral of f over [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-12);

struct LaplaceQuadrature {
    double value = 0.0;
    double quadrature_error = 0.0;
    /// |f(t_max)| e^{-s t_max} / s: the neglected tail when |f| does not grow past t_max.
    double tail_estimate = 0.0;
};

/// Integral of e^{-st} f(t) over (0, t_max) with a tail estimate. Throws
/// TailNotNegligible when the tail estimate exceeds tol * |value|.
LaplaceQuadrature laplace_quadrature(const std::function<double(double)>& f, double s, double t_max,
                                     double tol = 1e-10);

}  // namespace wrlab
