#pragma once

#include "heatctl/frame.hpp"

#include <string>
#include <utility>
#include <vector>

namespace heatctl {

/// Aligns a frame to a 1-minute grid covering [first minute, last minute].
/// Each cell is the mean of the raw readings falling inside that minute;
/// minutes with no readings are forward-filled from the previous minute.
/// Boolean columns keep their fractional means. Throws on an empty frame.
Frame resample_minutely(const Frame& frame);

struct OutlierReport {
    std::vector<Timestamp> removed_times;
    std::vector<double> removed_values;
    double median = 0.0;
    double robust_std = 0.0;  // MAD * 1.4826
    bool zero_spread = false; // MAD == 0: nothing removed, caller may warn
};

/// Drops rows whose `response` value deviates from the column median by more
/// than k robust standard deviations. Returns the filtered frame plus a
/// report of what was removed.
std::pair<Frame, OutlierReport> remove_outliers(const Frame& frame, const std::string& response,
                                                double k);

/// Adds an "hours" column (0-23) and seven one-hot weekday indicator columns
/// (Monday..Sunday), all kind=engineered.
Frame engineer_time_features(const Frame& frame);

/// Chronological split: train rows have timestamp <= boundary, test rows the
/// rest. Boundary must lie within the frame's span.
std::pair<Frame, Frame> split_at(const Frame& frame, Timestamp boundary);

}  // namespace heatctl
