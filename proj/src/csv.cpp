#include "heatctl/csv.hpp"

#include "heatctl/sensor_id.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace heatctl {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

ColumnKind infer_kind(const std::string& name) {
    if (is_engineered_name(name)) return ColumnKind::Engineered;
    auto id = try_parse_sensor_id(name);
    if (!id)
        throw std::runtime_error("column '" + name +
                                 "' is not a sensor id; pass a kind override for it");
    return id->is_numeric() ? ColumnKind::Numeric : ColumnKind::Boolean;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Frame ingest_csv(const std::string& path, const std::map<std::string, ColumnKind>& overrides) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("'" + path + "': empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_line(line);
    if (header.size() < 2 || header[0] != "timestamp")
        throw std::runtime_error("'" + path + "': header must start with 'timestamp'");

    Frame frame;
    frame.columns.reserve(header.size() - 1);
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string& name = header[i];
        if (frame.has_column(name))
            throw std::runtime_error("'" + path + "': duplicate column '" + name + "'");
        auto it = overrides.find(name);
        ColumnKind kind = it != overrides.end() ? it->second : infer_kind(name);
        frame.columns.push_back(Column{name, kind, {}});
    }

    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error("'" + path + "' row " + std::to_string(row_no) + ": expected " +
                                     std::to_string(header.size()) + " cells, got " +
                                     std::to_string(cells.size()));
        Timestamp ts;
        try {
            ts = Timestamp::parse(cells[0]);
        } catch (const std::exception& e) {
            throw std::runtime_error("'" + path + "' row " + std::to_string(row_no) + ": " +
                                     e.what());
        }
        if (!frame.times.empty() && ts < frame.times.back())
            throw std::runtime_error("'" + path + "' row " + std::to_string(row_no) +
                                     ": timestamps must be non-decreasing");
        frame.times.push_back(ts);
        for (std::size_t i = 1; i < cells.size(); ++i) {
            double v = 0.0;
            const std::string& cell = cells[i];
            auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
                throw std::runtime_error("'" + path + "' row " + std::to_string(row_no) +
                                         ": bad number '" + cell + "' in column '" +
                                         header[i] + "'");
            frame.columns[i - 1].values.push_back(v);
        }
    }
    return frame;
}

void write_csv(const Frame& frame, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "timestamp";
    for (const auto& c : frame.columns) out << ',' << c.name;
    out << '\n';
    for (std::size_t r = 0; r < frame.n_rows(); ++r) {
        out << frame.times[r].to_string();
        for (const auto& c : frame.columns) out << ',' << format_double(c.values[r]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace heatctl
