#pragma once

#include "heatctl/frame.hpp"

#include <map>
#include <string>

namespace heatctl {

/// Reads the standard CSV dialect: header "timestamp,<sensor-id>,...",
/// ISO-8601 local timestamps, decimal cells. Column kinds come from the
/// sensor naming convention (TMP/HYGR numeric, others Boolean); engineered
/// column names (hours, Monday..Sunday) are recognized on re-ingest.
/// `overrides` forces kinds for specific columns.
/// Timestamps may be irregular; rows must be non-decreasing in time.
Frame ingest_csv(const std::string& path,
                 const std::map<std::string, ColumnKind>& overrides = {});

/// Writes the same dialect. Doubles are rendered shortest-round-trip, so a
/// write/ingest cycle reproduces values exactly.
void write_csv(const Frame& frame, const std::string& path);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace heatctl
