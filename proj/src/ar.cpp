#include "heatctl/ar.hpp"

#include "heatctl/csv.hpp"
#include "heatctl/preprocess.hpp"
#include "heatctl/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace heatctl {

double ArModel::predict_next(std::span<const double> history) const {
    if (history.size() < max_lag())
        throw std::invalid_argument("ar: history shorter than the largest lag");
    double x = mu;
    for (std::size_t j = 0; j < lags.size(); ++j)
        x += alphas[j] * history[history.size() - lags[j]];
    return x;
}

std::vector<std::size_t> select_lags(std::span<const double> series,
                                     const LagSelectionConfig& config) {
    if (!(config.pacf_threshold > 0.0 && config.pacf_threshold < 1.0))
        throw std::invalid_argument("select_lags: threshold must be in (0,1)");
    if (config.max_lag == 0 || config.max_lag >= series.size() / 2)
        throw std::invalid_argument("select_lags: max_lag must be in [1, n/2)");

    std::vector<double> phi = pacf(series, config.max_lag);
    std::vector<std::size_t> lags;
    for (std::size_t k = 1; k <= config.max_lag; ++k)
        if (std::fabs(phi[k - 1]) >= config.pacf_threshold) lags.push_back(k);
    if (lags.empty()) lags.push_back(1);
    return lags;
}

ArModel fit_ar(std::span<const double> series, const std::vector<std::size_t>& lags) {
    if (lags.empty()) throw std::invalid_argument("fit_ar: no lags");
    for (std::size_t j = 0; j < lags.size(); ++j)
        if (lags[j] == 0 || (j > 0 && lags[j] <= lags[j - 1]))
            throw std::invalid_argument("fit_ar: lags must be strictly increasing and positive");

    std::size_t p = lags.back();
    if (series.size() < p + 10)
        throw std::invalid_argument("fit_ar: series too short for max lag " + std::to_string(p));
    if (variance_of(series) == 0.0) throw std::runtime_error("fit_ar: constant series");

    std::size_t n_obs = series.size() - p;
    std::size_t n_cols = lags.size() + 1;
    Eigen::MatrixXd design(n_obs, n_cols);
    Eigen::VectorXd target(n_obs);
    for (std::size_t i = 0; i < n_obs; ++i) {
        std::size_t t = p + i;
        design(i, 0) = 1.0;
        for (std::size_t j = 0; j < lags.size(); ++j) design(i, j + 1) = series[t - lags[j]];
        target(i) = series[t];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < Eigen::Index(n_cols))
        throw std::runtime_error("fit_ar: singular normal equations (rank " +
                                 std::to_string(qr.rank()) + " < " + std::to_string(n_cols) + ")");
    Eigen::VectorXd beta = qr.solve(target);

    ArModel model;
    model.mu = beta(0);
    model.lags = lags;
    model.alphas.resize(lags.size());
    for (std::size_t j = 0; j < lags.size(); ++j) model.alphas[j] = beta(j + 1);
    Eigen::VectorXd resid = target - design * beta;
    model.sigma2 = resid.squaredNorm() / double(n_obs);
    model.n_train = series.size();
    return model;
}

std::vector<double> rolling_forecast(const ArModel& model, std::span<const double> history,
                                     std::size_t horizon) {
    if (horizon == 0) throw std::invalid_argument("rolling_forecast: horizon must be >= 1");
    if (history.size() < model.max_lag())
        throw std::invalid_argument("rolling_forecast: insufficient history");

    // Only the last max_lag values are ever read, so keep a short window.
    std::vector<double> window(history.end() - std::ptrdiff_t(model.max_lag()), history.end());
    std::vector<double> out;
    out.reserve(horizon);
    for (std::size_t h = 0; h < horizon; ++h) {
        double x = model.predict_next(window);
        out.push_back(x);
        window.push_back(x);
    }
    return out;
}

namespace {

std::vector<double> rolling_forecast_refit(std::span<const double> series,
                                           const std::vector<std::size_t>& lags,
                                           std::size_t horizon) {
    std::vector<double> extended(series.begin(), series.end());
    std::vector<double> out;
    out.reserve(horizon);
    for (std::size_t h = 0; h < horizon; ++h) {
        ArModel m = fit_ar(extended, lags);
        double x = m.predict_next(extended);
        out.push_back(x);
        extended.push_back(x);
    }
    return out;
}

}  // namespace

AmbientForecast forecast_ambient(const Frame& train, const std::vector<std::string>& non_control,
                                 std::size_t horizon, const LagSelectionConfig& config) {
    if (horizon == 0) throw std::invalid_argument("forecast_ambient: horizon must be >= 1");
    if (train.n_rows() == 0) throw std::runtime_error("forecast_ambient: empty training frame");

    AmbientForecast result;
    Frame& future = result.future;
    Timestamp end = train.times.back();
    future.times.reserve(horizon);
    for (std::size_t h = 1; h <= horizon; ++h) future.times.push_back(end.plus_minutes(h));

    for (const auto& name : non_control) {
        const Column& col = train.column(name);
        if (col.kind == ColumnKind::Engineered) continue;  // handled below

        ArDiagnostics diag;
        diag.column = name;
        std::vector<double> values;
        if (variance_of(col.values) == 0.0) {
            diag.constant = true;
            diag.mu = col.values.back();
            values.assign(horizon, col.values.back());
        } else {
            try {
                std::vector<std::size_t> lags = select_lags(col.values, config);
                if (config.refit_each_step) {
                    values = rolling_forecast_refit(col.values, lags, horizon);
                    ArModel m = fit_ar(col.values, lags);
                    diag.lags = lags;
                    diag.alphas = m.alphas;
                    diag.mu = m.mu;
                    diag.sigma2 = m.sigma2;
                } else {
                    ArModel m = fit_ar(col.values, lags);
                    values = rolling_forecast(m, col.values, horizon);
                    diag.lags = m.lags;
                    diag.alphas = m.alphas;
                    diag.mu = m.mu;
                    diag.sigma2 = m.sigma2;
                }
            } catch (const std::exception& e) {
                throw std::runtime_error("forecast_ambient: column '" + name + "': " + e.what());
            }
            if (col.kind == ColumnKind::Boolean)
                for (double& v : values) v = std::clamp(v, 0.0, 1.0);
        }
        future.add_column(name, col.kind, std::move(values));
        result.diagnostics.push_back(std::move(diag));
    }

    // Calendar columns are exact in the future, so extend them
    // deterministically rather than forecast.
    bool any_engineered = false;
    for (const auto& name : non_control)
        if (train.has_column(name) && train.column(name).kind == ColumnKind::Engineered)
            any_engineered = true;
    if (any_engineered) {
        Frame with_time = engineer_time_features(Frame{future.times, {}});
        for (const auto& name : non_control) {
            if (train.column(name).kind != ColumnKind::Engineered) continue;
            if (!with_time.has_column(name))
                throw std::runtime_error("forecast_ambient: unknown engineered column '" + name +
                                         "'");
            future.add_column(name, ColumnKind::Engineered,
                              std::move(with_time.column(name).values));
        }
    }
    future.validate();
    return result;
}

void write_ar_diagnostics(const std::vector<ArDiagnostics>& diags, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    for (const auto& d : diags) {
        out << "column=" << d.column;
        if (d.constant) {
            out << " constant=" << format_double(d.mu) << '\n';
            continue;
        }
        out << " lags=";
        for (std::size_t j = 0; j < d.lags.size(); ++j)
            out << (j ? "," : "") << d.lags[j];
        out << " alphas=";
        for (std::size_t j = 0; j < d.alphas.size(); ++j)
            out << (j ? "," : "") << format_double(d.alphas[j]);
        out << " mu=" << format_double(d.mu) << " sigma2=" << format_double(d.sigma2) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace heatctl
