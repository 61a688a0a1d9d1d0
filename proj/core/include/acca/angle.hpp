#ifndef ACCA_ANGLE_HPP
#define ACCA_ANGLE_HPP

#include <cmath>
#include <stdexcept>

namespace acca {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Wraps x into the canonical range [-pi, pi) via the floor formula
//   wrap_pi(x) = x - 2*pi * floor((x + pi) / (2*pi)),
// with a final normalization so that rounding drift at the boundary
// cannot produce a value of exactly +pi or anything outside the range.
// The upper boundary maps down: wrap_pi(pi) == -pi.
inline double wrap_pi(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("wrap_pi: non-finite input");
    }
    double r = x - kTwoPi * std::floor((x + kPi) / kTwoPi);
    if (r < -kPi) r += kTwoPi;
    if (r >= kPi) r -= kTwoPi;
    return r;
}

// An angle in canonical radians, guaranteed to lie in [-pi, pi).
class Angle {
  public:
    Angle() = default;

    static Angle wrap(double radians) { return Angle(wrap_pi(radians)); }

    double radians() const { return value_; }

    friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }
    friend bool operator!=(Angle a, Angle b) { return a.value_ != b.value_; }

  private:
    explicit Angle(double canonical) : value_(canonical) {}

    double value_ = 0.0;
};

// Shortest circular difference b - a, in [-pi, pi).
inline double circ_increment(Angle a, Angle b) {
    return wrap_pi(b.radians() - a.radians());
}

}  // namespace acca

#endif  // ACCA_ANGLE_HPP
