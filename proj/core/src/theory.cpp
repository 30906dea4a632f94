#include "wrlab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wrlab/error.hpp"

namespace wrlab {

namespace {

struct NamedKind {
    BoundKind kind;
    std::string_view name;
};

constexpr NamedKind kKindNames[] = {
    {BoundKind::EqualSubdomains, "equal"},
    {BoundKind::DirichletLargerLinear, "dirichlet-larger-linear"},
    {BoundKind::DirichletLargerSuperlinear, "dirichlet-larger-superlinear"},
    {BoundKind::NeumannLargerLinear, "neumann-larger-linear"},
    {BoundKind::NeumannLargerSuperlinear, "neumann-larger-superlinear"},
    {BoundKind::Nnwr, "nnwr"},
    {BoundKind::Nnwr2D, "nnwr2d"},
};

[[noreturn]] void mismatch(const BoundSpec& spec, const std::string& what)
{
    fail(Errc::ParameterMismatch, std::string(to_string(spec.which)) + ": " + what);
}

// (c / (1 - e^{-(2k+1) L^2 / T}))^{2k} e^{-k^2 L^2 / T}, in log form.
double superlinear_factor(double c, double length, double t_final, int k)
{
    const double sigma_inv = length * length / t_final;
    const double kk = k;
    const double log_base = std::log(c) - std::log1p(-std::exp(-(2.0 * kk + 1.0) * sigma_inv));
    return std::exp(2.0 * kk * log_base - kk * kk * sigma_inv);
}

// log of 2^k C(m+k-1, m)
double log_weight(int k, int m)
{
    return k * std::numbers::ln2 + std::lgamma(m + k) - std::lgamma(m + 1.0) - std::lgamma(k);
}

constexpr int kMaxSeriesTerms = 10'000'000;

// Sums term(m) for m = 0, 1, ... . The series terms are unimodal in m, so the
// cut is only taken once they decrease.
template <typename Term>
double sum_unimodal_series(Term&& term, double tol)
{
    double sum = 0.0;
    double previous = -1.0;
    for (int m = 0; m < kMaxSeriesTerms; ++m) {
        const double value = term(m);
        sum += value;
        const bool decreasing = previous >= 0.0 && value <= previous;
        if (decreasing && value <= tol * sum)
            break;
        previous = value;
    }
    return sum;
}

}  // namespace

std::string_view to_string(BoundKind kind)
{
    for (const auto& entry : kKindNames)
        if (entry.kind == kind)
            return entry.name;
    return "unknown";
}

BoundKind parse_bound_kind(std::string_view name)
{
    for (const auto& entry : kKindNames)
        if (entry.name == name)
            return entry.kind;
    fail(Errc::InvalidArgument, "unknown bound kind '" + std::string(name) + "'");
}

bool BoundSpec::indexes_even_iterations() const noexcept
{
    return which == BoundKind::NeumannLargerLinear || which == BoundKind::NeumannLargerSuperlinear;
}

void BoundSpec::validate() const
{
    switch (which) {
    case BoundKind::EqualSubdomains:
        if (!(theta > 0.0 && theta <= 1.0))
            mismatch(*this, "theta must lie in (0, 1]");
        if (a > 0.0 && b > 0.0 && a != b)
            mismatch(*this, "requires a = b");
        return;
    case BoundKind::DirichletLargerLinear:
    case BoundKind::DirichletLargerSuperlinear:
        if (!(b > 0.0 && a > b))
            mismatch(*this, "requires a > b > 0");
        break;
    case BoundKind::NeumannLargerLinear:
    case BoundKind::NeumannLargerSuperlinear:
        if (!(a > 0.0 && b > a))
            mismatch(*this, "requires b > a > 0");
        break;
    case BoundKind::Nnwr:
    case BoundKind::Nnwr2D:
        if (!(h_min > 0.0))
            mismatch(*this, "requires h_min > 0");
        break;
    }
    const bool needs_time = which != BoundKind::DirichletLargerLinear &&
                            which != BoundKind::NeumannLargerLinear;
    if (needs_time && !(t_final > 0.0))
        mismatch(*this, "requires T > 0");
}

double bound_value(const BoundSpec& spec, int k)
{
    spec.validate();
    if (k < 0)
        fail(Errc::InvalidArgument, "bound_value: k must be nonnegative");
    const double kk = k;
    switch (spec.which) {
    case BoundKind::EqualSubdomains:
        return std::pow(std::abs(1.0 - 2.0 * spec.theta), kk);
    case BoundKind::DirichletLargerLinear:
        return std::pow((spec.a - spec.b) / (2.0 * spec.a), kk);
    case BoundKind::DirichletLargerSuperlinear:
        return std::pow((spec.a - spec.b) / spec.a, kk) *
               erfc(kk * spec.b / (2.0 * std::sqrt(spec.t_final)));
    case BoundKind::NeumannLargerLinear:
        return std::pow((spec.b - spec.a) / (2.0 * spec.a), 2.0 * kk);
    case BoundKind::NeumannLargerSuperlinear:
        return superlinear_factor(std::numbers::sqrt2, spec.a, spec.t_final, k);
    case BoundKind::Nnwr:
    case BoundKind::Nnwr2D:
        return superlinear_factor(std::sqrt(6.0), spec.h_min, spec.t_final, k);
    }
    return 0.0;
}

std::optional<double> bound_for_iteration(const BoundSpec& spec, int iteration)
{
    if (spec.indexes_even_iterations()) {
        if (iteration % 2 != 0)
            return std::nullopt;
        return bound_value(spec, iteration / 2);
    }
    return bound_value(spec, iteration);
}

double superlinear_alpha0()
{
    double x = 0.6;
    for (int it = 0; it < 50; ++it) {
        const double f = x * x * x * x + std::numbers::sqrt2 * x - 1.0;
        const double df = 4.0 * x * x * x + std::numbers::sqrt2;
        const double step = f / df;
        x -= step;
        if (std::abs(step) < 1e-16)
            break;
    }
    return x;
}

int superlinear_onset(double a, double t_final)
{
    if (!(a > 0.0))
        fail(Errc::InvalidArgument, "superlinear_onset: a must be positive");
    if (!(t_final >= 0.0))
        fail(Errc::InvalidArgument, "superlinear_onset: T must be nonnegative");
    return static_cast<int>(std::ceil(0.99 * t_final / (a * a)));
}

void KernelSpec::validate() const
{
    if (k < 1)
        fail(Errc::InvalidArgument, "KernelSpec: k must be >= 1");
    if (!(alpha > 0.0))
        fail(Errc::InvalidArgument, "KernelSpec: alpha must be positive");
    if (!(truncation_tol > 0.0 && truncation_tol < 1.0))
        fail(Errc::InvalidArgument, "KernelSpec: truncation_tol must lie in (0, 1)");
}

double kernel_cosech_pow(const KernelSpec& spec, double t)
{
    spec.validate();
    if (!(t > 0.0))
        fail(Errc::NonPositiveTime, "kernel_cosech_pow: t must be positive");
    const double log_norm = -0.5 * std::log(4.0 * std::numbers::pi * t * t * t);
    return sum_unimodal_series(
        [&](int m) {
            const double lambda = (2.0 * m + spec.k) * spec.alpha;
            return std::exp(log_weight(spec.k, m) + std::log(lambda) + log_norm -
                            lambda * lambda / (4.0 * t));
        },
        spec.truncation_tol);
}

double kernel_cosech_pow_integrated(const KernelSpec& spec, double t)
{
    spec.validate();
    if (t < 0.0)
        fail(Errc::NonPositiveTime, "kernel_cosech_pow_integrated: t must be nonnegative");
    if (t == 0.0)
        return 0.0;
    const double scale = 1.0 / (2.0 * std::sqrt(t));
    return sum_unimodal_series(
        [&](int m) {
            const double e = erfc((2.0 * m + spec.k) * spec.alpha * scale);
            return e == 0.0 ? 0.0 : std::exp(log_weight(spec.k, m) + std::log(e));
        },
        spec.truncation_tol);
}

double erfc(double x)
{
    return std::erfc(x);
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol)
{
    if (!(hi >= lo))
        fail(Errc::InvalidArgument, "integrate: need lo <= hi");
    if (hi == lo)
        return 0.0;
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 15, rel_tol,
                                                                         &error);
}

LaplaceQuadrature laplace_quadrature(const std::function<double(double)>& f, double s, double t_max,
                                     double tol)
{
    if (!(s > 0.0))
        fail(Errc::InvalidArgument, "laplace_quadrature: s must be positive");
    if (!(t_max > 0.0))
        fail(Errc::InvalidArgument, "laplace_quadrature: t_max must be positive");

    LaplaceQuadrature out;
    const auto integrand = [&](double t) { return t > 0.0 ? std::exp(-s * t) * f(t) : 0.0; };
    out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 0.0, t_max, 15, 1e-13, &out.quadrature_error);
    out.tail_estimate = std::abs(f(t_max)) * std::exp(-s * t_max) / s;
    if (out.tail_estimate > tol * std::abs(out.value)) {
        std::ostringstream os;
        os << "laplace_quadrature: tail estimate " << out.tail_estimate << " exceeds " << tol
           << " * |" << out.value << "|";
        fail(Errc::TailNotNegligible, os.str());
    }
    return out;
}

}  // namespace wrlab
