#ifndef ACCA_DYNAMICS_HPP
#define ACCA_DYNAMICS_HPP

#include <vector>

#include "acca/configuration.hpp"
#include "acca/matching.hpp"
#include "acca/rng.hpp"
#include "acca/topology.hpp"

namespace acca {

// The bi-modal noise targets. pi is stored canonically as -pi; the
// kick uses the wrapped difference, so the motion is identical.
enum class NoiseTarget { Zero, Pi };

inline Angle noise_target_angle(NoiseTarget t) {
    return t == NoiseTarget::Zero ? Angle::wrap(0.0) : Angle::wrap(kPi);
}

// Per-step parameters of the parallel dynamics: noise strength and the
// number of simultaneous midpoint updates / noise kicks.
struct StepParams {
    double epsilon = 0.0;
    int k_mid = 1;
    int k_noise = 0;

    void validate(const Topology& topo) const {
        if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
            throw std::invalid_argument("StepParams: epsilon outside [0, 1]");
        }
        if (k_mid < 1 || k_mid > topo.max_matching_size()) {
            throw std::invalid_argument(
                "StepParams: k_mid outside [1, max matching size]");
        }
        if (k_noise < 0 || k_noise > topo.n()) {
            throw std::invalid_argument("StepParams: k_noise outside [0, n]");
        }
    }
};

// Both endpoints of one edge move to their circular midpoint along the
// shortest arc; all other sites are untouched. Afterwards the wrapped
// difference across the edge is zero.
Configuration midpoint_update(Configuration c, const Topology& topo, Edge e);

// One site moves a fraction epsilon of the shortest circular distance
// toward the target.
Configuration noise_kick(Configuration c, int site, NoiseTarget target,
                         double epsilon);

// One uniformly chosen edge is midpoint-updated. Consumes exactly one
// draw (the edge).
Configuration acca_step(Configuration c, const Topology& topo, Rng& rng);

// acca_step, then a noise kick at a uniform site with a uniform target.
// Consumes exactly three draws, in the order edge, site, target.
Configuration noisy_step(Configuration c, const Topology& topo, double epsilon,
                         Rng& rng);

// The parallel dynamics: a uniform k_mid-matching is midpoint-updated
// with every move computed from the pre-step configuration, then a
// uniform k_noise-subset of sites receives independent noise kicks.
//
// Draw order (part of the reproducibility contract): the matching
// draws, then the k_noise subset draws, then one target draw per
// perturbed site in ascending site order.
class ParallelStepper {
  public:
    ParallelStepper(const Topology& topo, const StepParams& params);

    // Advances t by 1, in place.
    void step(Configuration& c, Rng& rng);

    const Topology& topology() const { return topo_; }
    const StepParams& params() const { return params_; }

  private:
    Topology topo_;
    StepParams params_;
    matching::Sampler matching_;
    matching::SubsetSampler subset_;
    std::vector<int> edge_buf_;
    std::vector<int> site_buf_;
};

// One-shot wrapper over ParallelStepper.
Configuration parallel_step(Configuration c, const Topology& topo,
                            const StepParams& params, Rng& rng);

// Uniform i.i.d. configuration, one draw per site in site order.
Configuration random_configuration(int n, Rng& rng);

}  // namespace acca

#endif  // ACCA_DYNAMICS_HPP
