#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wrlab/report.hpp"

namespace wrlab {

/// Column order of every convergence CSV.
inline constexpr const char* kCsvHeader = "k,error,bound,theta,method,T,geometry_id";

struct CsvRow {
    int k = 0;
    double error = 0.0;
    std::optional<double> bound;  ///< empty cell when absent
    double theta = 0.0;
    std::string method;
    double t_final = 0.0;
    std::string geometry_id;
};

/// Header plus one row per iteration record, runs in order. Doubles are
/// printed with 17 significant digits so they round-trip exactly.
void write_csv(const ExperimentReport& report, std::ostream& out);

/// Writes the CSV to `path`; throws IoError if the file cannot be written.
void emit_csv(const ExperimentReport& report, const std::string& path);

std::vector<CsvRow> parse_csv(std::istream& in);
/// Throws IoError if the file cannot be read or is malformed.
std::vector<CsvRow> parse_csv_file(const std::string& path);

}  // namespace wrlab
