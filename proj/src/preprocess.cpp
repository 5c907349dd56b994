#include "heatctl/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heatctl {

Frame resample_minutely(const Frame& frame) {
    if (frame.n_rows() == 0) throw std::runtime_error("resample: empty frame");
    for (std::size_t i = 1; i < frame.times.size(); ++i)
        if (frame.times[i] < frame.times[i - 1])
            throw std::runtime_error("resample: timestamps must be non-decreasing");

    std::int64_t first = frame.times.front().epoch_minutes();
    std::int64_t last = frame.times.back().epoch_minutes();
    std::size_t n_out = std::size_t(last - first + 1);

    Frame out;
    out.times.reserve(n_out);
    for (std::int64_t m = first; m <= last; ++m) out.times.push_back(Timestamp(m * 60));
    for (const auto& c : frame.columns)
        out.columns.push_back(Column{c.name, c.kind, std::vector<double>(n_out, 0.0)});

    std::size_t row = 0;
    for (std::size_t o = 0; o < n_out; ++o) {
        std::int64_t minute = first + std::int64_t(o);
        std::size_t begin = row;
        while (row < frame.n_rows() && frame.times[row].epoch_minutes() == minute) ++row;
        std::size_t count = row - begin;
        if (count == 0) {
            if (o == 0) throw std::runtime_error("resample: first minute has no readings");
            for (auto& c : out.columns) c.values[o] = c.values[o - 1];
            continue;
        }
        for (std::size_t j = 0; j < frame.columns.size(); ++j) {
            double sum = 0.0;
            for (std::size_t r = begin; r < row; ++r) sum += frame.columns[j].values[r];
            out.columns[j].values[o] = sum / double(count);
        }
    }
    out.validate();
    return out;
}

namespace {

double median_of(std::vector<double> v) {
    std::size_t n = v.size();
    std::sort(v.begin(), v.end());
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::pair<Frame, OutlierReport> remove_outliers(const Frame& frame, const std::string& response,
                                                double k) {
    const Column& resp = frame.column(response);
    if (resp.kind == ColumnKind::Boolean)
        throw std::runtime_error("remove_outliers: response '" + response + "' is not numeric");
    if (frame.n_rows() == 0) throw std::runtime_error("remove_outliers: empty frame");
    if (!(k > 0)) throw std::runtime_error("remove_outliers: k must be positive");

    OutlierReport report;
    report.median = median_of(resp.values);
    std::vector<double> dev(resp.values.size());
    for (std::size_t i = 0; i < resp.values.size(); ++i)
        dev[i] = std::fabs(resp.values[i] - report.median);
    report.robust_std = median_of(dev) * 1.4826;

    if (report.robust_std == 0.0) {
        report.zero_spread = true;
        return {frame, report};
    }

    double cut = k * report.robust_std;
    std::vector<std::size_t> keep;
    keep.reserve(frame.n_rows());
    for (std::size_t i = 0; i < frame.n_rows(); ++i) {
        if (std::fabs(resp.values[i] - report.median) > cut) {
            report.removed_times.push_back(frame.times[i]);
            report.removed_values.push_back(resp.values[i]);
        } else {
            keep.push_back(i);
        }
    }
    if (report.removed_times.empty()) return {frame, report};

    Frame out;
    out.times.reserve(keep.size());
    for (std::size_t i : keep) out.times.push_back(frame.times[i]);
    for (const auto& c : frame.columns) {
        Column nc{c.name, c.kind, {}};
        nc.values.reserve(keep.size());
        for (std::size_t i : keep) nc.values.push_back(c.values[i]);
        out.columns.push_back(std::move(nc));
    }
    return {out, report};
}

Frame engineer_time_features(const Frame& frame) {
    Frame out = frame;
    std::vector<double> hours(frame.n_rows());
    for (std::size_t i = 0; i < frame.n_rows(); ++i) hours[i] = double(frame.times[i].hour_of_day());
    out.add_column(kHoursColumn, ColumnKind::Engineered, std::move(hours));
    for (int d = 0; d < 7; ++d) {
        std::vector<double> flag(frame.n_rows());
        for (std::size_t i = 0; i < frame.n_rows(); ++i)
            flag[i] = frame.times[i].weekday() == d ? 1.0 : 0.0;
        out.add_column(kWeekdayNames[d], ColumnKind::Engineered, std::move(flag));
    }
    return out;
}

std::pair<Frame, Frame> split_at(const Frame& frame, Timestamp boundary) {
    if (frame.n_rows() == 0) throw std::runtime_error("split: empty frame");
    if (boundary < frame.times.front() || frame.times.back() < boundary)
        throw std::runtime_error("split: boundary " + boundary.to_string() + " outside span");
    std::size_t cut = std::size_t(
        std::upper_bound(frame.times.begin(), frame.times.end(), boundary) - frame.times.begin());
    return {frame.slice_rows(0, cut), frame.slice_rows(cut, frame.n_rows())};
}

}  // namespace heatctl
