#pragma once

#include "heatctl/timestamp.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace heatctl {

enum class ColumnKind { Numeric, Boolean, Engineered };

const char* to_string(ColumnKind k);

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::Numeric;
    std::vector<double> values;
};

/// Timestamp-indexed table of sensor readings. Timestamps are strictly
/// increasing; every column has one value per timestamp.
class Frame {
public:
    std::vector<Timestamp> times;
    std::vector<Column> columns;

    std::size_t n_rows() const { return times.size(); }
    std::size_t n_cols() const { return columns.size(); }

    bool has_column(const std::string& name) const;
    /// Throws std::out_of_range if absent.
    const Column& column(const std::string& name) const;
    Column& column(const std::string& name);
    std::size_t column_index(const std::string& name) const;

    void add_column(std::string name, ColumnKind kind, std::vector<double> values);

    std::vector<std::string> column_names() const;

    /// Row slice [begin, end).
    Frame slice_rows(std::size_t begin, std::size_t end) const;

    /// Verifies column lengths match the index and timestamps strictly
    /// increase; throws std::runtime_error otherwise.
    void validate() const;
};

/// Engineered column names added by engineer_time_features.
inline constexpr const char* kHoursColumn = "hours";
bool is_engineered_name(const std::string& name);

}  // namespace heatctl
