#include "acca/matching.hpp"

#include <algorithm>
#include <cassert>

namespace acca::matching {

namespace {

void check_range(int n, int k, BoundaryKind kind) {
    const int min_n = kind == BoundaryKind::Ring ? 3 : 2;
    if (n < min_n) {
        throw std::invalid_argument("count_matchings: n too small");
    }
    if (k < 0 || k > n / 2) {
        throw std::invalid_argument("count_matchings: k out of [0, n/2]");
    }
}

// path_counts[m][j] = number of j-matchings of a path on m vertices
// (= binom(m-j, j)); recurrence splits on whether the first edge is
// taken: C[m][j] = C[m-1][j] + C[m-2][j-1].
std::vector<std::vector<BigInt>> path_count_table(int n, int k) {
    std::vector<std::vector<BigInt>> c(static_cast<size_t>(n) + 1,
                                       std::vector<BigInt>(static_cast<size_t>(k) + 1));
    for (int m = 0; m <= n; ++m) {
        c[m][0] = 1;
        for (int j = 1; j <= k; ++j) {
            if (2 * j > m) {
                c[m][j] = 0;
                continue;
            }
            c[m][j] = c[m - 1][j] + c[m - 2][j - 1];
        }
    }
    return c;
}

double ratio(const BigInt& num, const BigInt& den) {
    assert(den > 0);
    return num.convert_to<double>() / den.convert_to<double>();
}

}  // namespace

BigInt count_matchings(int n, int k, BoundaryKind kind) {
    check_range(n, k, kind);
    const auto c = path_count_table(n, k);
    if (kind == BoundaryKind::Path) {
        return c[n][k];
    }
    // Wrap edge out: path on all n vertices. Wrap edge in: its two
    // endpoints are spoken for, leaving a path on the n-2 interior
    // vertices needing k-1 edges.
    BigInt total = c[n][k];
    if (k >= 1) total += c[n - 2][k - 1];
    return total;
}

Sampler::Sampler(int n, int k, BoundaryKind kind) : n_(n), k_(k), kind_(kind) {
    check_range(n, k, kind);
    const auto c = path_count_table(n, k);

    p_take_.assign(static_cast<size_t>(n + 1) * (k + 1), 0.0);
    for (int m = 2; m <= n; ++m) {
        for (int j = 1; j <= k && 2 * j <= m; ++j) {
            if (c[m][j] == 0) continue;
            p_take_[static_cast<size_t>(m) * (k + 1) + j] = ratio(c[m - 2][j - 1], c[m][j]);
        }
    }
    if (kind == BoundaryKind::Ring && k >= 1) {
        const BigInt wrap_in = c[n - 2][k - 1];
        const BigInt total = c[n][k] + wrap_in;
        if (total == 0) {
            throw std::invalid_argument("Sampler: no matching of the requested size");
        }
        p_wrap_ = ratio(wrap_in, total);
    } else if (c[n][k] == 0) {
        throw std::invalid_argument("Sampler: no matching of the requested size");
    }
}

void Sampler::walk_path(int first_site, int m, int j, std::vector<int>& out,
                        Rng& rng) const {
    // One draw per visited position, even when the decision is forced
    // (p == 0 or 1), so the draw count is exactly m - j0 regardless of
    // where the edges land.
    int site = first_site;
    int remaining = m;
    int edges_left = j;
    while (remaining > 0) {
        const double p = edges_left > 0 ? p_take(remaining, edges_left) : 0.0;
        const double u = rng.next_unit();
        if (u < p) {
            out.push_back(site);  // path edge index == its left site
            site += 2;
            remaining -= 2;
            --edges_left;
        } else {
            site += 1;
            remaining -= 1;
        }
    }
}

void Sampler::sample_into(std::vector<int>& out, Rng& rng) const {
    out.clear();
    if (k_ == 0) return;

    if (kind_ == BoundaryKind::Path) {
        walk_path(0, n_, k_, out, rng);
        return;
    }

    const double u = rng.next_unit();
    if (u < p_wrap_) {
        // Wrap edge taken: sites n-1 and 0 are used; the interior path
        // runs over sites 1 .. n-2. Padding draw keeps the total raw
        // draw count at n - k + 1 in both branches.
        walk_path(1, n_ - 2, k_ - 1, out, rng);
        out.push_back(n_ - 1);
        (void)rng.next_unit();
    } else {
        walk_path(0, n_, k_, out, rng);
    }
}

std::vector<int> Sampler::sample(Rng& rng) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k_));
    sample_into(out, rng);
    return out;
}

std::vector<int> sample_matching(int n, int k, BoundaryKind kind, Rng& rng) {
    return Sampler(n, k, kind).sample(rng);
}

SubsetSampler::SubsetSampler(int n) {
    if (n < 1) {
        throw std::invalid_argument("SubsetSampler: n must be positive");
    }
    perm_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm_[i] = i;
}

void SubsetSampler::sample_into(std::vector<int>& out, int k, Rng& rng) {
    const int n = static_cast<int>(perm_.size());
    if (k < 0 || k > n) {
        throw std::invalid_argument("SubsetSampler: k out of [0, n]");
    }
    out.clear();
    swapped_to_.clear();
    for (int t = 0; t < k; ++t) {
        const int r = t + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - t)));
        std::swap(perm_[t], perm_[r]);
        swapped_to_.push_back(r);
        out.push_back(perm_[t]);
    }
    // Undo the swaps so the permutation is identity again; each call is
    // then independent of all previous ones.
    for (int t = k - 1; t >= 0; --t) {
        std::swap(perm_[t], perm_[swapped_to_[t]]);
    }
    std::sort(out.begin(), out.end());
}

std::vector<int> SubsetSampler::sample(int k, Rng& rng) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k));
    sample_into(out, k, rng);
    return out;
}

std::vector<int> sample_subset(int n, int k, Rng& rng) {
    return SubsetSampler(n).sample(k, rng);
}

bool is_matching(const Topology& topo, const std::vector<int>& edge_indices) {
    std::vector<char> used(static_cast<size_t>(topo.n()), 0);
    int prev = -1;
    for (int idx : edge_indices) {
        if (idx < 0 || idx >= topo.edge_count() || idx <= prev) return false;
        prev = idx;
        const Edge e = topo.edge(idx);
        if (used[e.i] || used[e.j]) return false;
        used[e.i] = used[e.j] = 1;
    }
    return true;
}

}  // namespace acca::matching
