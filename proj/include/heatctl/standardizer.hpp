#pragma once

#include "heatctl/frame.hpp"

#include <string>
#include <vector>

namespace heatctl {

/// Per-column z-score transform. Statistics are computed once, from training
/// rows, with the population standard deviation (divide by N) so that
/// transform/inverse round-trips exactly to the invertibility tolerance.
class Standardizer {
public:
    struct ColumnStats {
        std::string name;
        double mean = 0.0;
        double stddev = 1.0;
    };

    /// Fits on the listed columns of `train`. Throws if a column has zero
    /// variance, naming it.
    static Standardizer fit(const Frame& train, const std::vector<std::string>& columns);

    /// Returns a copy of `frame` with the fitted columns transformed.
    /// Columns absent from the frame are skipped (a future frame may carry
    /// only a feature subset).
    Frame transform(const Frame& frame) const;
    Frame inverse(const Frame& frame) const;

    /// Transforms a single value of a fitted column; returns v unchanged if
    /// the column was not fitted.
    double transform_value(const std::string& column, double v) const;

    const std::vector<ColumnStats>& stats() const { return stats_; }
    bool covers(const std::string& column) const;

    void save(const std::string& path) const;
    static Standardizer load(const std::string& path);

private:
    std::vector<ColumnStats> stats_;
};

}  // namespace heatctl
