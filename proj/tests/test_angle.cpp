#include <doctest.h>

#include <cmath>
#include <limits>

#include "acca/configuration.hpp"
#include "acca/dynamics.hpp"
#include "acca/observables.hpp"
#include "acca/rng.hpp"

using namespace acca;

TEST_CASE("wrap_pi fixed points and boundaries") {
    CHECK(wrap_pi(0.0) == 0.0);
    CHECK(wrap_pi(kPi) == -kPi);  // upper boundary maps down
    CHECK(wrap_pi(-kPi) == -kPi);
    CHECK(wrap_pi(3.0 * kPi) == doctest::Approx(-kPi).epsilon(1e-15));
    // -0.9*pi - 0.9*pi = -1.8*pi wraps to 0.2*pi
    CHECK(wrap_pi(-1.8 * kPi) == doctest::Approx(0.2 * kPi).epsilon(1e-12));
}

TEST_CASE("wrap_pi rejects non-finite input") {
    CHECK_THROWS_AS(wrap_pi(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(wrap_pi(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(wrap_pi(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("wrap_pi range over random and boundary inputs") {
    Rng rng(0x5eed0001);
    auto in_range = [](double r) { return r >= -kPi && r < kPi; };
    int violations = 0;
    for (int i = 0; i < 1000000; ++i) {
        const double x = (rng.next_unit() - 0.5) * 2000.0;
        if (!in_range(wrap_pi(x))) ++violations;
    }
    CHECK(violations == 0);

    const double eps = std::ldexp(1.0, -52);
    for (double x : {kPi, -kPi, 3 * kPi, -3 * kPi, kPi + eps, kPi - eps,
                     -kPi + eps, -kPi - eps, kTwoPi, -kTwoPi, 1e9, -1e9}) {
        CAPTURE(x);
        CHECK(in_range(wrap_pi(x)));
    }
}

TEST_CASE("wrap_pi idempotence is exact") {
    Rng rng(0x5eed0002);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        const double x = (rng.next_unit() - 0.5) * 300.0;
        const double once = wrap_pi(x);
        if (wrap_pi(once) != once) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("wrap_pi congruence: (wrap(x) - x) is a multiple of 2*pi") {
    Rng rng(0x5eed0003);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        const double x = (rng.next_unit() - 0.5) * 200.0;
        const double q = (wrap_pi(x) - x) / kTwoPi;
        if (!(std::abs(q - std::round(q)) < 1e-12)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("circ_increment basic values") {
    CHECK(circ_increment(Angle::wrap(0.0), Angle::wrap(kPi / 2)) == kPi / 2);
    // shortest arc crosses the cut at +-pi
    CHECK(circ_increment(Angle::wrap(0.9 * kPi), Angle::wrap(-0.9 * kPi)) ==
          doctest::Approx(0.2 * kPi).epsilon(1e-12));
    Rng rng(0x5eed0004);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const Angle x = Angle::wrap((rng.next_unit() - 0.5) * kTwoPi);
        if (circ_increment(x, x) != 0.0) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("circ_increment antisymmetry away from the boundary") {
    Rng rng(0x5eed0005);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        const Angle a = Angle::wrap((rng.next_unit() - 0.5) * kTwoPi);
        const Angle b = Angle::wrap((rng.next_unit() - 0.5) * kTwoPi);
        const double ab = circ_increment(a, b);
        if (ab == -kPi) continue;
        if (circ_increment(b, a) != -ab) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("winding number of simple configurations") {
    const Topology ring(BoundaryKind::Ring, 100);

    const Configuration constant = Configuration::constant(100, Angle::wrap(0.7));
    CHECK(winding_number(constant, ring) == 0.0);
    CHECK(winding_number_rounded(constant, ring) == 0);

    const auto wound = ideal_winding_lattice(100, 2, Angle::wrap(0.0));
    CHECK(winding_number_rounded(wound.config, ring) == 2);
    CHECK(std::abs(winding_number(wound.config, ring) - 2.0) < kWindingIntegerTolerance);

    const Topology ring12(BoundaryKind::Ring, 12);
    const auto negative = ideal_winding_lattice(12, -1, Angle::wrap(0.3));
    CHECK(winding_number_rounded(negative.config, ring12) == -1);
    CHECK(std::abs(winding_number(negative.config, ring12) + 1.0) < kWindingIntegerTolerance);
}

TEST_CASE("winding number is rejected on the path") {
    const Topology path(BoundaryKind::Path, 10);
    const Configuration c = Configuration::constant(10, Angle::wrap(0.0));
    CHECK_THROWS_AS(winding_number(c, path), std::invalid_argument);
}

TEST_CASE("winding number is integer for random ring configurations") {
    Rng rng(0x5eed0006);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(498));
        const Topology ring(BoundaryKind::Ring, n);
        const Configuration c = random_configuration(n, rng);
        const double w = winding_number(c, ring);
        if (!(std::abs(w - std::round(w)) < kWindingIntegerTolerance)) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("topology shape") {
    const Topology path(BoundaryKind::Path, 5);
    CHECK(path.edge_count() == 4);
    CHECK(path.edge(3) == Edge{3, 4});
    CHECK_FALSE(path.contains(Edge{4, 0}));

    const Topology ring(BoundaryKind::Ring, 5);
    CHECK(ring.edge_count() == 5);
    CHECK(ring.edge(4) == Edge{4, 0});
    CHECK(ring.contains(Edge{4, 0}));

    CHECK_THROWS_AS(Topology(BoundaryKind::Ring, 2), std::invalid_argument);
    CHECK_THROWS_AS(Topology(BoundaryKind::Path, 1), std::invalid_argument);
}
