#ifndef ACCA_TOPOLOGY_HPP
#define ACCA_TOPOLOGY_HPP

#include <stdexcept>
#include <string>

namespace acca {

enum class BoundaryKind { Path, Ring };

// One nearest-neighbour edge between sites i and j. Sites are 0-based
// in code; the wrap-around edge of a ring on n sites is (n-1, 0).
struct Edge {
    int i = 0;
    int j = 0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.i == b.i && a.j == b.j;
    }
};

// A path or a ring on n sites. Path edges are (i, i+1) for
// 0 <= i < n-1; the ring adds the wrap-around edge (n-1, 0).
class Topology {
  public:
    Topology(BoundaryKind kind, int n) : kind_(kind), n_(n) {
        if (kind == BoundaryKind::Path && n < 2) {
            throw std::invalid_argument("Topology: path needs n >= 2");
        }
        // A ring on 2 sites would duplicate the edge (0,1).
        if (kind == BoundaryKind::Ring && n < 3) {
            throw std::invalid_argument("Topology: ring needs n >= 3");
        }
    }

    BoundaryKind kind() const { return kind_; }
    int n() const { return n_; }

    int edge_count() const {
        return kind_ == BoundaryKind::Ring ? n_ : n_ - 1;
    }

    Edge edge(int index) const {
        if (index < 0 || index >= edge_count()) {
            throw std::invalid_argument("Topology::edge: index out of range");
        }
        return Edge{index, index + 1 == n_ ? 0 : index + 1};
    }

    bool contains(const Edge& e) const {
        if (e.i < 0 || e.i >= n_) return false;
        if (e.j == e.i + 1 && e.j < n_) return true;
        return kind_ == BoundaryKind::Ring && e.i == n_ - 1 && e.j == 0;
    }

    // Largest number of pairwise disjoint edges.
    int max_matching_size() const { return n_ / 2; }

    friend bool operator==(const Topology& a, const Topology& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }

  private:
    BoundaryKind kind_;
    int n_;
};

inline std::string to_string(BoundaryKind k) {
    return k == BoundaryKind::Path ? "path" : "ring";
}

}  // namespace acca

#endif  // ACCA_TOPOLOGY_HPP
