#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wrlab {

enum class RunStatus { Converged, NotConverged };

struct IterationRecord {
    int k = 0;
    double error = 0.0;
    /// Theoretical bound on `error` (factor times initial error), when one applies.
    std::optional<double> bound;
    /// Seconds since the start of the run, measured after iteration k.
    double wall_seconds = 0.0;
};

/// Convergence history of one run (one method, one relaxation parameter).
/// NotConverged is a status, not an error: the history is complete either way.
struct IterationReport {
    std::string method;
    double theta = 0.0;
    double t_final = 0.0;
    std::string geometry_id;
    std::vector<IterationRecord> records;
    RunStatus status = RunStatus::NotConverged;

    double initial_error() const;
    double final_error() const;
    std::vector<double> errors() const;
    /// Number of iterations until error <= target, or nullopt if never reached.
    std::optional<int> iterations_to(double target) const;

    /// Throws InvalidArgument unless errors are nonnegative and k strictly increases.
    void check_invariants() const;
};

struct ExperimentReport {
    std::vector<IterationReport> runs;

    std::size_t row_count() const;
};

}  // namespace wrlab
