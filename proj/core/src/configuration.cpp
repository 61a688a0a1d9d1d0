#include "acca/configuration.hpp"

#include <cmath>

namespace acca {

double winding_number(const Configuration& c, const Topology& topo) {
    if (topo.kind() != BoundaryKind::Ring) {
        throw std::invalid_argument("winding_number: defined on rings only");
    }
    if (topo.n() != c.size()) {
        throw std::invalid_argument("winding_number: topology/configuration size mismatch");
    }
    double sum = 0.0;
    const int m = topo.edge_count();
    for (int e = 0; e < m; ++e) {
        const Edge edge = topo.edge(e);
        sum += circ_increment(c[edge.i], c[edge.j]);
    }
    return sum / kTwoPi;
}

int winding_number_rounded(const Configuration& c, const Topology& topo) {
    const double w = winding_number(c, topo);
    return static_cast<int>(std::llround(w));
}

}  // namespace acca
