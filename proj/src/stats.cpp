#include "heatctl/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace heatctl {

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / double(v.size());
}

double variance_of(std::span<const double> v) {
    double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / double(v.size());
}

double rmse(std::span<const double> truth, std::span<const double> pred) {
    if (truth.size() != pred.size() || truth.empty())
        throw std::invalid_argument("rmse: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        double d = truth[i] - pred[i];
        s += d * d;
    }
    return std::sqrt(s / double(truth.size()));
}

std::vector<double> acf(std::span<const double> series, std::size_t max_lag) {
    std::size_t n = series.size();
    if (n <= max_lag) throw std::invalid_argument("acf: series shorter than max_lag");
    double m = mean_of(series);
    double denom = 0.0;
    for (double x : series) denom += (x - m) * (x - m);
    if (denom == 0.0) throw std::invalid_argument("acf: constant series");

    std::vector<double> r(max_lag + 1);
    r[0] = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = k; t < n; ++t) num += (series[t] - m) * (series[t - k] - m);
        r[k] = num / denom;
    }
    return r;
}

std::vector<double> pacf(std::span<const double> series, std::size_t max_lag) {
    std::vector<double> r = acf(series, max_lag);

    // Durbin-Levinson: phi[k][j] coefficients of the order-k predictor;
    // the partial autocorrelation at lag k is phi[k][k].
    std::vector<double> out(max_lag);
    std::vector<double> phi_prev(max_lag + 1, 0.0), phi_cur(max_lag + 1, 0.0);
    double err = 1.0;  // prediction error variance ratio

    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = r[k];
        for (std::size_t j = 1; j < k; ++j) num -= phi_prev[j] * r[k - j];
        if (std::fabs(err) <= 1e-12)
            throw std::runtime_error("pacf: Durbin-Levinson breakdown at lag " + std::to_string(k));
        double phi_kk = num / err;
        phi_cur[k] = phi_kk;
        for (std::size_t j = 1; j < k; ++j) phi_cur[j] = phi_prev[j] - phi_kk * phi_prev[k - j];
        err *= (1.0 - phi_kk * phi_kk);
        out[k - 1] = phi_kk;
        phi_prev = phi_cur;
    }
    return out;
}

}  // namespace heatctl
