#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace heatctl {

double mean_of(std::span<const double> v);
double variance_of(std::span<const double> v);  // population (divide by N)

/// Root-mean-square error; sizes must match and be non-zero.
double rmse(std::span<const double> truth, std::span<const double> pred);

/// Sample autocorrelations r_0..r_max_lag with the biased (divide by N)
/// estimator on the mean-centered series. r_0 is always 1. Throws on a
/// constant series or when series length <= max_lag.
std::vector<double> acf(std::span<const double> series, std::size_t max_lag);

/// Partial autocorrelations phi_kk for k = 1..max_lag via Durbin-Levinson on
/// the sample ACF. Element [0] of the result is phi_11 (== r_1 exactly).
/// Throws on recursion breakdown (denominator within 1e-12 of zero).
std::vector<double> pacf(std::span<const double> series, std::size_t max_lag);

}  // namespace heatctl
