#include "acca/observables.hpp"

#include <cmath>

namespace acca {

namespace {

double sign_of(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
}

std::vector<Angle> ring_embedding(int n) {
    std::vector<Angle> theta;
    theta.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        theta.push_back(Angle::wrap(kTwoPi * i / n));
    }
    return theta;
}

Configuration wind_phases(const std::vector<Angle>& theta, int w, Angle alpha) {
    std::vector<Angle> phi;
    phi.reserve(theta.size());
    for (Angle t : theta) {
        phi.push_back(Angle::wrap(alpha.radians() + w * t.radians()));
    }
    return Configuration(std::move(phi));
}

}  // namespace

KuramotoOrder kuramoto(const Configuration& c) {
    double re = 0.0;
    double im = 0.0;
    for (Angle a : c.angles()) {
        re += std::cos(a.radians());
        im += std::sin(a.radians());
    }
    re /= c.size();
    im /= c.size();
    KuramotoOrder out;
    out.r = std::hypot(re, im);
    if (out.r >= kPsiUndefinedThreshold) {
        out.psi = Angle::wrap(std::atan2(im, re));
    }
    return out;
}

double y_projection(const Configuration& c) {
    double sum = 0.0;
    for (Angle a : c.angles()) {
        sum += std::sin(a.radians());
    }
    return sum / c.size();
}

IdealWinding ideal_winding_lattice(int n, int w, Angle alpha) {
    if (n < 3) {
        throw std::invalid_argument("ideal_winding_lattice: n must be >= 3");
    }
    auto theta = ring_embedding(n);
    auto phi = wind_phases(theta, w, alpha);
    return IdealWinding{std::move(theta), std::move(phi)};
}

IdealWinding ideal_winding_random(int n, int w, Angle alpha, Rng& rng) {
    if (n < 3) {
        throw std::invalid_argument("ideal_winding_random: n must be >= 3");
    }
    std::vector<Angle> theta;
    theta.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        theta.push_back(Angle::wrap(-kPi + kTwoPi * rng.next_unit()));
    }
    auto phi = wind_phases(theta, w, alpha);
    return IdealWinding{std::move(theta), std::move(phi)};
}

double tau1_pairs(std::span<const Angle> theta, std::span<const Angle> phi) {
    if (theta.size() != phi.size() || theta.size() < 2) {
        throw std::invalid_argument("tau1_pairs: needs two paired samples of equal size");
    }
    const std::size_t n = theta.size();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = circ_increment(theta[i], theta[j]);
            num += d * sign_of(circ_increment(phi[i], phi[j]));
            den += std::abs(d);
        }
    }
    if (den == 0.0) {
        throw std::runtime_error("tau1_pairs: zero denominator");
    }
    return num / den;
}

double tau1_config(const Configuration& c) {
    const auto theta = ring_embedding(c.size());
    return tau1_pairs(theta, c.angles());
}

double tau1_config_sampled(const Configuration& c, std::int64_t pair_budget,
                           Rng& rng) {
    if (pair_budget < 1) {
        throw std::invalid_argument("tau1_config_sampled: pair budget must be >= 1");
    }
    const int n = c.size();
    const auto theta = ring_embedding(n);
    double num = 0.0;
    double den = 0.0;
    for (std::int64_t s = 0; s < pair_budget; ++s) {
        const int i = static_cast<int>(rng.next_below(n));
        int j = static_cast<int>(rng.next_below(n - 1));
        if (j >= i) ++j;
        const double d = circ_increment(theta[i], theta[j]);
        num += d * sign_of(circ_increment(c[i], c[j]));
        den += std::abs(d);
    }
    if (den == 0.0) {
        throw std::runtime_error("tau1_config_sampled: zero denominator");
    }
    return num / den;
}

double tau1_pair_estimate(int w, Angle alpha, std::int64_t samples, Rng& rng) {
    if (w == 0) {
        throw std::domain_error("tau1_pair_estimate: w must be nonzero");
    }
    if (samples < 1) {
        throw std::invalid_argument("tau1_pair_estimate: samples must be >= 1");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::int64_t s = 0; s < samples; ++s) {
        const double t1 = -kPi + kTwoPi * rng.next_unit();
        const double t2 = -kPi + kTwoPi * rng.next_unit();
        const double p1 = wrap_pi(alpha.radians() + w * t1);
        const double p2 = wrap_pi(alpha.radians() + w * t2);
        const double dt = wrap_pi(t2 - t1);
        num += dt * sign_of(wrap_pi(p2 - p1));
        den += std::abs(dt);
    }
    if (den == 0.0) {
        throw std::runtime_error("tau1_pair_estimate: zero denominator");
    }
    return num / den;
}

double tau1_theory(int w) {
    if (w == 0) {
        throw std::domain_error("tau1_theory: w must be nonzero");
    }
    return (w % 2 == 0 ? -1.0 : 1.0) / w;
}

std::int64_t alternating_odd_sum(int w) {
    if (w < 1) {
        throw std::invalid_argument("alternating_odd_sum: w must be >= 1");
    }
    std::int64_t sum = 0;
    for (int k = 0; k < w; ++k) {
        const std::int64_t term = 2 * static_cast<std::int64_t>(k) + 1;
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace acca
