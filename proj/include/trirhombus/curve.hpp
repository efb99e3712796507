#ifndef TRIRHOMBUS_CURVE_HPP
#define TRIRHOMBUS_CURVE_HPP

#include <cstdint>
#include <optional>
#include <ostream>

#include "trirhombus/rational.hpp"

namespace trirhombus {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, with no nonsingularity check.
struct WeierstrassCoefficients {
    Rational a1, a2, a3, a4, a6;

    friend bool operator==(const WeierstrassCoefficients&, const WeierstrassCoefficients&) = default;
};

/// Standard discriminant from the b2, b4, b6, b8 invariants. Zero means singular.
Rational discriminant(const WeierstrassCoefficients& c);

struct AffinePoint {
    Rational x;
    Rational y;

    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Either the point at infinity or an affine pair. Membership on a particular
/// curve is checked by Curve::contains, not by the point itself.
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rational x, Rational y) : affine_(AffinePoint{std::move(x), std::move(y)}) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !affine_.has_value(); }
    /// Throws DomainError on the point at infinity.
    const AffinePoint& affine() const;
    const Rational& x() const { return affine().x; }
    const Rational& y() const { return affine().y; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p);

private:
    std::optional<AffinePoint> affine_;
};

/**
 * A nonsingular elliptic curve in long Weierstrass form over Q with the
 * chord-tangent group law. The a1 and a3 terms are handled directly, so
 * coordinates are never moved to a short model.
 *
 * Group operations reject points that are not on the curve.
 */
class Curve {
public:
    /// Throws DomainError when the discriminant vanishes.
    explicit Curve(WeierstrassCoefficients coefficients);

    const WeierstrassCoefficients& coefficients() const { return c_; }
    const Rational& discriminant() const { return disc_; }

    bool contains(const CurvePoint& p) const;

    CurvePoint negate(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint twice(const CurvePoint& p) const { return add(p, p); }
    /// m-fold sum by double-and-add; negative m multiplies the negation.
    CurvePoint scalar_mul(std::int64_t m, const CurvePoint& p) const;

private:
    void require_on_curve(const CurvePoint& p) const;
    CurvePoint add_unchecked(const CurvePoint& p, const CurvePoint& q) const;

    WeierstrassCoefficients c_;
    Rational disc_;
};

/// y^2 - 3xy - 12y = x^3 + 6x^2 + 8x
const Curve& curve_E();

/// Generator of the free part of E(Q), (0, 0).
const CurvePoint& generator_P();

/// The rational 2-torsion point (-4, 0).
const CurvePoint& torsion_T();

}  // namespace trirhombus

#endif  // TRIRHOMBUS_CURVE_HPP
