#include "sosa/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "sosa/errors.hpp"

namespace sosa {
namespace {

namespace fs = std::filesystem;

std::ofstream open_out(const fs::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void close_out(std::ofstream& out, const fs::path& path)
{
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

double parse_number(const std::string& s, const fs::path& path)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw IoError("'" + path.string() + "': bad number '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string& s, const fs::path& path)
{
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size())
        throw IoError("'" + path.string() + "': bad integer '" + s + "'");
    return static_cast<std::size_t>(v);
}

std::vector<std::vector<std::string>> read_table(const fs::path& path, const std::string& header, std::size_t width)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw IoError("'" + path.string() + "': unexpected header");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto cells = split_csv(line);
        if (cells.size() != width)
            throw IoError("'" + path.string() + "': malformed row '" + line + "'");
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<fs::path> emit_outputs(const std::vector<TrialRecord>& records, const Summary& summary,
                                   const fs::path& out_dir)
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + out_dir.string() + "': " + ec.message());

    std::vector<fs::path> written;

    const fs::path curves_path = out_dir / "curves.csv";
    {
        auto out = open_out(curves_path);
        out << kCurvesHeader << '\n';
        for (const auto& r : records)
            for (std::size_t k = 0; k < r.curve.size(); ++k)
                out << r.algorithm << ',' << r.problem << ',' << r.trial << ',' << (k + 1) << ','
                    << format_number(r.curve[k]) << '\n';
        close_out(out, curves_path);
    }
    written.push_back(curves_path);

    const fs::path summary_path = out_dir / "summary.csv";
    {
        auto out = open_out(summary_path);
        out << kSummaryHeader << '\n';
        for (const auto& row : summary.rows)
            out << row.algorithm << ',' << row.problem << ',' << row.trials << ',' << format_number(row.mean_final)
                << ',' << format_number(row.std_final) << ',' << format_number(row.q) << '\n';
        close_out(out, summary_path);
    }
    written.push_back(summary_path);

    const fs::path totals_path = out_dir / "qtotals.csv";
    {
        auto out = open_out(totals_path);
        out << kQTotalsHeader << '\n';
        for (const auto& [name, q] : summary.q_totals)
            out << name << ',' << format_number(q) << '\n';
        close_out(out, totals_path);
    }
    written.push_back(totals_path);

    // group order follows first appearance in the records
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::vector<const TrialRecord*>> groups;
    for (const auto& r : records) {
        auto key = std::make_pair(r.algorithm, r.problem);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted)
            keys.push_back(key);
        it->second.push_back(&r);
    }
    for (const auto& key : keys) {
        const CurveBand band = curve_band(groups.at(key));
        const fs::path path = out_dir / ("curve_" + key.first + "_" + key.second + ".csv");
        auto out = open_out(path);
        out << kBandHeader << '\n';
        for (std::size_t k = 0; k < band.mean.size(); ++k)
            out << (k + 1) << ',' << format_number(band.mean[k]) << ',' << format_number(band.stddev[k]) << '\n';
        close_out(out, path);
        written.push_back(path);
    }
    return written;
}

std::vector<TrialRecord> read_curves_csv(const fs::path& path)
{
    std::vector<TrialRecord> out;
    for (const auto& cells : read_table(path, kCurvesHeader, 5)) {
        const std::size_t trial = parse_count(cells[2], path);
        const std::size_t index = parse_count(cells[3], path);
        const double value = parse_number(cells[4], path);
        const bool same = !out.empty() && out.back().algorithm == cells[0] && out.back().problem == cells[1]
                          && out.back().trial == trial;
        if (!same) {
            TrialRecord rec;
            rec.algorithm = cells[0];
            rec.problem = cells[1];
            rec.trial = trial;
            out.push_back(std::move(rec));
        }
        TrialRecord& rec = out.back();
        if (index != rec.curve.size() + 1)
            throw IoError("'" + path.string() + "': eval_index out of sequence");
        rec.curve.push_back(value);
        rec.final_best_f = value;
    }
    return out;
}

std::vector<SummaryRow> read_summary_csv(const fs::path& path)
{
    std::vector<SummaryRow> out;
    for (const auto& cells : read_table(path, kSummaryHeader, 6)) {
        SummaryRow row;
        row.algorithm = cells[0];
        row.problem = cells[1];
        row.trials = parse_count(cells[2], path);
        row.mean_final = parse_number(cells[3], path);
        row.std_final = parse_number(cells[4], path);
        row.q = parse_number(cells[5], path);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace sosa
