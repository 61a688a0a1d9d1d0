#ifndef ACCA_STATS_HPP
#define ACCA_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace acca::stats {

// Kolmogorov-Smirnov statistic of samples against Uniform[lo, hi).
double ks_statistic_uniform(std::vector<double> samples, double lo, double hi);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic critical values: reject at significance alpha when the
// statistic exceeds these.
double ks_critical_one_sample(double alpha, std::size_t n);
double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m);

// Pearson goodness-of-fit statistic against expected counts.
double chi_square_statistic(std::span<const long long> observed,
                            std::span<const double> expected);

// Upper quantile of the chi-square distribution: reject at
// significance alpha when the statistic exceeds this.
double chi_square_critical(double alpha, int degrees_of_freedom);

}  // namespace acca::stats

#endif  // ACCA_STATS_HPP
