#include "wrlab/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wrlab/error.hpp"

namespace wrlab {

namespace {

void put_double(std::ostream& out, double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
}

double get_double(const std::string& cell, std::size_t line)
{
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
        fail(Errc::IoError, "csv line " + std::to_string(line) + ": bad number '" + cell + "'");
    return v;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

}  // namespace

void write_csv(const ExperimentReport& report, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const auto& run : report.runs) {
        for (const auto& r : run.records) {
            out << r.k << ',';
            put_double(out, r.error);
            out << ',';
            if (r.bound)
                put_double(out, *r.bound);
            out << ',';
            put_double(out, run.theta);
            out << ',' << run.method << ',';
            put_double(out, run.t_final);
            out << ',' << run.geometry_id << '\n';
        }
    }
}

void emit_csv(const ExperimentReport& report, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        fail(Errc::IoError, "cannot open '" + path + "' for writing");
    write_csv(report, out);
    out.flush();
    if (!out)
        fail(Errc::IoError, "write to '" + path + "' failed");
}

std::vector<CsvRow> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        fail(Errc::IoError, "csv: missing or unexpected header");
    std::vector<CsvRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != 7)
            fail(Errc::IoError, "csv line " + std::to_string(line_no) + ": expected 7 cells");
        CsvRow row;
        row.k = static_cast<int>(get_double(cells[0], line_no));
        row.error = get_double(cells[1], line_no);
        if (!cells[2].empty())
            row.bound = get_double(cells[2], line_no);
        row.theta = get_double(cells[3], line_no);
        row.method = cells[4];
        row.t_final = get_double(cells[5], line_no);
        row.geometry_id = cells[6];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CsvRow> parse_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::IoError, "cannot open '" + path + "'");
    return parse_csv(in);
}

}  // namespace wrlab
