#include "heatctl/frame.hpp"

#include <stdexcept>

namespace heatctl {

const char* to_string(ColumnKind k) {
    switch (k) {
        case ColumnKind::Numeric: return "numeric";
        case ColumnKind::Boolean: return "boolean";
        case ColumnKind::Engineered: return "engineered";
    }
    return "?";
}

bool Frame::has_column(const std::string& name) const {
    for (const auto& c : columns)
        if (c.name == name) return true;
    return false;
}

std::size_t Frame::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw std::out_of_range("no column '" + name + "'");
}

const Column& Frame::column(const std::string& name) const { return columns[column_index(name)]; }
Column& Frame::column(const std::string& name) { return columns[column_index(name)]; }

void Frame::add_column(std::string name, ColumnKind kind, std::vector<double> values) {
    if (has_column(name)) throw std::runtime_error("duplicate column '" + name + "'");
    if (values.size() != times.size())
        throw std::runtime_error("column '" + name + "' length " + std::to_string(values.size()) +
                                 " != " + std::to_string(times.size()) + " rows");
    columns.push_back(Column{std::move(name), kind, std::move(values)});
}

std::vector<std::string> Frame::column_names() const {
    std::vector<std::string> out;
    out.reserve(columns.size());
    for (const auto& c : columns) out.push_back(c.name);
    return out;
}

Frame Frame::slice_rows(std::size_t begin, std::size_t end) const {
    if (begin > end || end > n_rows()) throw std::out_of_range("bad row slice");
    Frame out;
    out.times.assign(times.begin() + begin, times.begin() + end);
    out.columns.reserve(columns.size());
    for (const auto& c : columns)
        out.columns.push_back(
            Column{c.name, c.kind, {c.values.begin() + begin, c.values.begin() + end}});
    return out;
}

void Frame::validate() const {
    for (const auto& c : columns)
        if (c.values.size() != times.size())
            throw std::runtime_error("column '" + c.name + "' length mismatch");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i - 1] < times[i]))
            throw std::runtime_error("timestamps not strictly increasing at row " +
                                     std::to_string(i));
}

bool is_engineered_name(const std::string& name) {
    if (name == kHoursColumn) return true;
    for (const char* d : kWeekdayNames)
        if (name == d) return true;
    return false;
}

}  // namespace heatctl
