#ifndef ACCA_TESTS_ENUMERATION_HPP
#define ACCA_TESTS_ENUMERATION_HPP

#include <vector>

#include "acca/topology.hpp"

namespace acca::testsupport {

// Brute-force enumeration of all k-matchings as sorted edge-index
// sets. Exponential; oracle use only (n <= ~16).
inline void enumerate_rec(const Topology& topo, int k, int first_edge,
                          std::vector<char>& used, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int e = first_edge; e < topo.edge_count(); ++e) {
        const Edge edge = topo.edge(e);
        if (used[edge.i] || used[edge.j]) continue;
        used[edge.i] = used[edge.j] = 1;
        current.push_back(e);
        enumerate_rec(topo, k, e + 1, used, current, out);
        current.pop_back();
        used[edge.i] = used[edge.j] = 0;
    }
}

inline std::vector<std::vector<int>> enumerate_matchings(const Topology& topo, int k) {
    std::vector<std::vector<int>> out;
    std::vector<char> used(static_cast<size_t>(topo.n()), 0);
    std::vector<int> current;
    enumerate_rec(topo, k, 0, used, current, out);
    return out;
}

}  // namespace acca::testsupport

#endif  // ACCA_TESTS_ENUMERATION_HPP
