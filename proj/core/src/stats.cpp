#include "acca/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace acca::stats {

double ks_statistic_uniform(std::vector<double> samples, double lo, double hi) {
    if (samples.empty() || !(hi > lo)) {
        throw std::invalid_argument("ks_statistic_uniform: bad input");
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = std::clamp((samples[i] - lo) / (hi - lo), 0.0, 1.0);
        d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - cdf));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    double d = 0.0;
    while (ia < a.size() && ib < b.size()) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < a.size() && a[ia] <= x) ++ia;
        while (ib < b.size() && b[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na -
                                 static_cast<double>(ib) / nb));
    }
    return d;
}

namespace {

// Asymptotic Kolmogorov coefficient c(alpha) = sqrt(-ln(alpha/2) / 2).
double kolmogorov_coefficient(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("ks critical: alpha outside (0, 1)");
    }
    return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

}  // namespace

double ks_critical_one_sample(double alpha, std::size_t n) {
    return kolmogorov_coefficient(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(double alpha, std::size_t n, std::size_t m) {
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return kolmogorov_coefficient(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

double chi_square_statistic(std::span<const long long> observed,
                            std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw std::invalid_argument("chi_square_statistic: size mismatch");
    }
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0)) {
            throw std::invalid_argument("chi_square_statistic: nonpositive expected count");
        }
        const double d = static_cast<double>(observed[i]) - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

double chi_square_critical(double alpha, int degrees_of_freedom) {
    if (!(alpha > 0.0 && alpha < 1.0) || degrees_of_freedom < 1) {
        throw std::invalid_argument("chi_square_critical: bad input");
    }
    const boost::math::chi_squared dist(degrees_of_freedom);
    return boost::math::quantile(dist, 1.0 - alpha);
}

}  // namespace acca::stats
