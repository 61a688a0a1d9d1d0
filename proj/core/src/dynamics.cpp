#include "acca/dynamics.hpp"

namespace acca {

namespace {

void midpoint_in_place(Configuration& c, Edge e) {
    const double delta = circ_increment(c[e.i], c[e.j]);
    c.set(e.i, Angle::wrap(c[e.i].radians() + 0.5 * delta));
    c.set(e.j, Angle::wrap(c[e.j].radians() - 0.5 * delta));
}

void kick_in_place(Configuration& c, int site, Angle target, double epsilon) {
    const double pull = wrap_pi(target.radians() - c[site].radians());
    c.set(site, Angle::wrap(c[site].radians() + epsilon * pull));
}

NoiseTarget draw_target(Rng& rng) {
    return rng.next_below(2) == 0 ? NoiseTarget::Zero : NoiseTarget::Pi;
}

}  // namespace

Configuration midpoint_update(Configuration c, const Topology& topo, Edge e) {
    if (topo.n() != c.size() || !topo.contains(e)) {
        throw std::invalid_argument("midpoint_update: edge not in topology");
    }
    midpoint_in_place(c, e);
    return c;
}

Configuration noise_kick(Configuration c, int site, NoiseTarget target,
                         double epsilon) {
    if (site < 0 || site >= c.size()) {
        throw std::invalid_argument("noise_kick: site out of range");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("noise_kick: epsilon outside [0, 1]");
    }
    kick_in_place(c, site, noise_target_angle(target), epsilon);
    return c;
}

Configuration acca_step(Configuration c, const Topology& topo, Rng& rng) {
    if (topo.n() != c.size()) {
        throw std::invalid_argument("acca_step: topology/configuration size mismatch");
    }
    const int e = static_cast<int>(rng.next_below(topo.edge_count()));
    midpoint_in_place(c, topo.edge(e));
    return c;
}

Configuration noisy_step(Configuration c, const Topology& topo, double epsilon,
                         Rng& rng) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("noisy_step: epsilon outside [0, 1]");
    }
    c = acca_step(std::move(c), topo, rng);
    const int site = static_cast<int>(rng.next_below(c.size()));
    const NoiseTarget a = draw_target(rng);
    kick_in_place(c, site, noise_target_angle(a), epsilon);
    return c;
}

ParallelStepper::ParallelStepper(const Topology& topo, const StepParams& params)
    : topo_(topo),
      params_(params),
      matching_(topo.n(), params.k_mid, topo.kind()),
      subset_(topo.n()) {
    params.validate(topo);
}

void ParallelStepper::step(Configuration& c, Rng& rng) {
    // The matching edges are vertex-disjoint, so updating them in place
    // one after another still reads every value from the pre-step
    // configuration.
    matching_.sample_into(edge_buf_, rng);
    for (int e : edge_buf_) {
        midpoint_in_place(c, topo_.edge(e));
    }
    subset_.sample_into(site_buf_, params_.k_noise, rng);
    for (int site : site_buf_) {
        const NoiseTarget a = draw_target(rng);
        kick_in_place(c, site, noise_target_angle(a), params_.epsilon);
    }
}

Configuration parallel_step(Configuration c, const Topology& topo,
                            const StepParams& params, Rng& rng) {
    if (topo.n() != c.size()) {
        throw std::invalid_argument(
            "parallel_step: topology/configuration size mismatch");
    }
    ParallelStepper stepper(topo, params);
    stepper.step(c, rng);
    return c;
}

Configuration random_configuration(int n, Rng& rng) {
    std::vector<Angle> angles;
    angles.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        angles.push_back(Angle::wrap(-kPi + kTwoPi * rng.next_unit()));
    }
    return Configuration(std::move(angles));
}

}  // namespace acca
