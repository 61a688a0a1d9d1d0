#ifndef ACCA_MATCHING_HPP
#define ACCA_MATCHING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "acca/rng.hpp"
#include "acca/topology.hpp"

namespace acca::matching {

using BigInt = boost::multiprecision::cpp_int;

// Number of k-matchings (sets of k pairwise disjoint edges):
// binom(n-k, k) on the path, binom(n-k, k) + binom(n-k-1, k-1) on the
// ring. Exact integers; the values overflow 64 bits around n = 100.
BigInt count_matchings(int n, int k, BoundaryKind kind);

// Exactly uniform sampling of k-matchings for a fixed (n, k, kind).
//
// Construction precomputes decision probabilities from exact counts
// (one rounding each, so per-decision bias is at or below 1 ulp).
// Sampling then walks the sites left to right, taking or skipping the
// edge at the current position with probability weighted by the exact
// sub-counts of the two branches. The ring is handled by first
// conditioning on whether the wrap-around edge (n-1, 0) is in the
// matching, which reduces both branches to path walks. No rejection
// anywhere.
//
// Raw draw counts are a fixed function of (n, k, kind):
//   k == 0          -> 0
//   path,  k >= 1   -> n - k
//   ring,  k >= 1   -> n - k + 1
// (The wrap-taken branch of the ring consumes one padding draw so both
// branches cost the same; trajectory replay must not depend on which
// branch was taken.)
class Sampler {
  public:
    Sampler(int n, int k, BoundaryKind kind);

    // Sorted edge indices of a uniformly drawn k-matching.
    std::vector<int> sample(Rng& rng) const;

    void sample_into(std::vector<int>& out, Rng& rng) const;

    int n() const { return n_; }
    int k() const { return k_; }
    BoundaryKind kind() const { return kind_; }

  private:
    double p_take(int m, int j) const {
        return p_take_[static_cast<size_t>(m) * (k_ + 1) + j];
    }

    // Walks a path of m vertices whose first vertex is `first_site`,
    // placing j edges; appends edge indices to out.
    void walk_path(int first_site, int m, int j, std::vector<int>& out,
                   Rng& rng) const;

    int n_;
    int k_;
    BoundaryKind kind_;
    std::vector<double> p_take_;  // (n+1) x (k+1); P(take | m left, j left)
    double p_wrap_ = 0.0;         // ring only: P(wrap edge in matching)
};

// One-shot convenience wrapper; builds a Sampler per call.
std::vector<int> sample_matching(int n, int k, BoundaryKind kind, Rng& rng);

// Uniform k-subsets of {0, ..., n-1} by partial Fisher-Yates shuffle:
// exactly k raw draws per sample, O(k) work after the swaps are undone.
class SubsetSampler {
  public:
    explicit SubsetSampler(int n);

    // Sorted ascending sites. Exactly k raw draws.
    std::vector<int> sample(int k, Rng& rng);

    void sample_into(std::vector<int>& out, int k, Rng& rng);

    int n() const { return static_cast<int>(perm_.size()); }

  private:
    std::vector<int> perm_;       // identity, restored after every call
    std::vector<int> swapped_to_;  // scratch for the undo pass
};

std::vector<int> sample_subset(int n, int k, Rng& rng);

// True when the edge indices form a matching of the topology: indices
// valid, strictly increasing, and no two edges share a site.
bool is_matching(const Topology& topo, const std::vector<int>& edge_indices);

}  // namespace acca::matching

#endif  // ACCA_MATCHING_HPP
