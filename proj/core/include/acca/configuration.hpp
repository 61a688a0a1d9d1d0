#ifndef ACCA_CONFIGURATION_HPP
#define ACCA_CONFIGURATION_HPP

#include <span>
#include <vector>

#include "acca/angle.hpp"
#include "acca/topology.hpp"

namespace acca {

// A full opinion state: one canonical angle per site. The length is
// fixed for the lifetime of the object.
class Configuration {
  public:
    explicit Configuration(std::vector<Angle> angles) : angles_(std::move(angles)) {
        if (angles_.size() < 2) {
            throw std::invalid_argument("Configuration: needs at least 2 sites");
        }
    }

    static Configuration constant(int n, Angle value) {
        return Configuration(std::vector<Angle>(static_cast<size_t>(n), value));
    }

    int size() const { return static_cast<int>(angles_.size()); }

    Angle operator[](int site) const { return angles_[static_cast<size_t>(site)]; }

    void set(int site, Angle value) { angles_[static_cast<size_t>(site)] = value; }

    std::span<const Angle> angles() const { return angles_; }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.angles_ == b.angles_;
    }

  private:
    std::vector<Angle> angles_;
};

// |W - round(W)| stays below this for ring configurations up to
// n = 10^4; winding sums accumulate at most one rounding per edge.
inline constexpr double kWindingIntegerTolerance = 1e-9;

// Sum of circular increments around the ring, divided by 2*pi.
// Defined on rings only; integer-valued up to kWindingIntegerTolerance.
double winding_number(const Configuration& c, const Topology& topo);

// The nearest integer to winding_number.
int winding_number_rounded(const Configuration& c, const Topology& topo);

}  // namespace acca

#endif  // ACCA_CONFIGURATION_HPP
