#include "wrlab/report.hpp"

#include "wrlab/error.hpp"

namespace wrlab {

double IterationReport::initial_error() const
{
    if (records.empty())
        fail(Errc::InvalidArgument, "IterationReport: no records");
    return records.front().error;
}

double IterationReport::final_error() const
{
    if (records.empty())
        fail(Errc::InvalidArgument, "IterationReport: no records");
    return records.back().error;
}

std::vector<double> IterationReport::errors() const
{
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back(r.error);
    return out;
}

std::optional<int> IterationReport::iterations_to(double target) const
{
    for (const auto& r : records)
        if (r.error <= target)
            return r.k;
    return std::nullopt;
}

void IterationReport::check_invariants() const
{
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!(records[i].error >= 0.0))
            fail(Errc::InvalidArgument, "IterationReport: negative or NaN error");
        if (i > 0 && records[i].k <= records[i - 1].k)
            fail(Errc::InvalidArgument, "IterationReport: iteration counter not increasing");
    }
}

std::size_t ExperimentReport::row_count() const
{
    std::size_t n = 0;
    for (const auto& run : runs)
        n += run.records.size();
    return n;
}

}  // namespace wrlab
