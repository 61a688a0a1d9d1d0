#ifndef ACCA_OBSERVABLES_HPP
#define ACCA_OBSERVABLES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acca/configuration.hpp"
#include "acca/rng.hpp"

namespace acca {

// Below this modulus the mean resultant vector is numerically zero and
// its argument is noise, so psi is reported as undefined.
inline constexpr double kPsiUndefinedThreshold = 1e-12;

// Modulus and argument of the mean unit vector of the opinions.
// r == 1 iff consensus; r == 0 for balanced configurations.
struct KuramotoOrder {
    double r = 0.0;
    std::optional<Angle> psi;
};

KuramotoOrder kuramoto(const Configuration& c);

// Mean of sin(theta): distinguishes the two orientations near +pi/2
// and -pi/2 that the bi-modal noise selects.
double y_projection(const Configuration& c);

// An ideal winding configuration: site phases Theta and opinions
// Phi_i = wrap_pi(alpha + w * Theta_i).
struct IdealWinding {
    std::vector<Angle> site_phase;  // Theta
    Configuration config;           // Phi
};

// Lattice mode: Theta_i = wrap_pi(2*pi*i/n) for i = 1..n. Used as a
// winding-w initial condition for the dynamics; winding_number of the
// result is exactly w for |w| < n/2.
IdealWinding ideal_winding_lattice(int n, int w, Angle alpha);

// I.i.d. mode: Theta_i uniform on the circle, one draw per site in
// site order. Used by the Monte Carlo checks of the tau1 closed form.
IdealWinding ideal_winding_random(int n, int w, Angle alpha, Rng& rng);

// Weighted toroidal Kendall coefficient of paired angular samples
// (theta_i, phi_i), as a U-statistic over all ordered index pairs:
//
//   sum_{i != j} wrap_pi(theta_j - theta_i) * sign(wrap_pi(phi_j - phi_i))
//   ---------------------------------------------------------------------
//   sum_{i != j} |wrap_pi(theta_j - theta_i)|
//
// sign(0) := 0. O(n^2) time. Result in [-1, 1].
double tau1_pairs(std::span<const Angle> theta, std::span<const Angle> phi);

// tau1 of a configuration: tau1_pairs with the ring embedding
// Theta_i = wrap_pi(2*pi*i/n) in the first slot, so that an ideal
// winding lattice reproduces the closed form. The denominator is
// positive for n >= 2 by construction.
double tau1_config(const Configuration& c);

// Same estimator over `pair_budget` uniformly drawn ordered pairs, for
// configurations too large for the full O(n^2) sum.
double tau1_config_sampled(const Configuration& c, std::int64_t pair_budget,
                           Rng& rng);

// Monte Carlo estimate of tau1 over i.i.d. pairs drawn from the ideal
// winding ensemble; converges to tau1_theory(w) as samples grows.
double tau1_pair_estimate(int w, Angle alpha, std::int64_t samples, Rng& rng);

// Closed form on ideal winding configurations: (-1)^(w+1) / w, so
// |tau1| = 1/|w|. w == 0 is a domain error.
double tau1_theory(int w);

// sum_{k=0}^{w-1} (-1)^k (2k+1), evaluated directly; equals
// (-1)^(w+1) * w.
std::int64_t alternating_odd_sum(int w);

}  // namespace acca

#endif  // ACCA_OBSERVABLES_HPP
