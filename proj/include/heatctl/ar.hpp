#pragma once

#include "heatctl/frame.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace heatctl {

/// Autoregressive model over a selected lag subset:
///   X_t = mu + sum_j alpha_j * X_{t - lag_j} + eps_t
struct ArModel {
    double mu = 0.0;
    std::vector<std::size_t> lags;    // strictly increasing, all >= 1
    std::vector<double> alphas;       // one per lag
    double sigma2 = 0.0;              // residual mean square
    std::size_t n_train = 0;

    std::size_t max_lag() const { return lags.empty() ? 0 : lags.back(); }
    /// One-step prediction given history (most recent value last).
    double predict_next(std::span<const double> history) const;
};

struct LagSelectionConfig {
    double pacf_threshold = 0.1;
    std::size_t max_lag = 40;
    /// Re-estimate the coefficients after each appended prediction instead
    /// of only growing the conditioning window. Off by default.
    bool refit_each_step = false;
};

/// All lags k in 1..max_lag whose |pacf_kk| >= threshold, ascending. An
/// empty selection falls back to {1} so every non-constant series stays
/// forecastable.
std::vector<std::size_t> select_lags(std::span<const double> series,
                                     const LagSelectionConfig& config);

/// Least-squares fit of X_t on the lagged values plus an intercept, over all
/// t with full history. Throws on a constant series or singular normal
/// equations.
ArModel fit_ar(std::span<const double> series, const std::vector<std::size_t>& lags);

/// `horizon` one-step predictions, each conditioning on the history extended
/// with all previous predictions. No noise is injected.
std::vector<double> rolling_forecast(const ArModel& model, std::span<const double> history,
                                     std::size_t horizon);

/// Per-column fit diagnostics emitted alongside forecasts.
struct ArDiagnostics {
    std::string column;
    bool constant = false;            // extended as a constant, no model fit
    std::vector<std::size_t> lags;
    std::vector<double> alphas;
    double mu = 0.0;
    double sigma2 = 0.0;
};

struct AmbientForecast {
    Frame future;                     // one row per minute after the training end
    std::vector<ArDiagnostics> diagnostics;
};

/// Stage-one forecasting: per non-control column, select lags, fit, and roll
/// forward `horizon` minutes past the end of `train`. Boolean columns are
/// clamped to [0,1] after forecasting; a constant column is extended as its
/// constant; engineered calendar columns (hours, weekday flags) are computed
/// from the future timestamps, not forecast.
AmbientForecast forecast_ambient(const Frame& train, const std::vector<std::string>& non_control,
                                 std::size_t horizon, const LagSelectionConfig& config);

void write_ar_diagnostics(const std::vector<ArDiagnostics>& diags, const std::string& path);

}  // namespace heatctl
