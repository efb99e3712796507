#include "trirhombus/curve.hpp"

#include <sstream>
#include <string>

namespace trirhombus {

Rational discriminant(const WeierstrassCoefficients& c) {
    const Rational b2 = c.a1 * c.a1 + Rational(4) * c.a2;
    const Rational b4 = Rational(2) * c.a4 + c.a1 * c.a3;
    const Rational b6 = c.a3 * c.a3 + Rational(4) * c.a6;
    const Rational b8 = c.a1 * c.a1 * c.a6 + Rational(4) * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 +
                        c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    return -b2 * b2 * b8 - Rational(8) * pow(b4, 3) - Rational(27) * b6 * b6 +
           Rational(9) * b2 * b4 * b6;
}

const AffinePoint& CurvePoint::affine() const {
    if (!affine_) throw DomainError("point at infinity has no affine coordinates");
    return *affine_;
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) {
    if (p.is_infinity()) return os << "infinity";
    return os << p.x() << ' ' << p.y();
}

Curve::Curve(WeierstrassCoefficients coefficients)
    : c_(std::move(coefficients)), disc_(trirhombus::discriminant(c_)) {
    if (disc_.is_zero()) throw DomainError("singular Weierstrass cubic (discriminant 0)");
}

bool Curve::contains(const CurvePoint& p) const {
    if (p.is_infinity()) return true;
    const Rational& x = p.x();
    const Rational& y = p.y();
    const Rational lhs = y * y + c_.a1 * x * y + c_.a3 * y;
    const Rational rhs = x * x * x + c_.a2 * x * x + c_.a4 * x + c_.a6;
    return lhs == rhs;
}

void Curve::require_on_curve(const CurvePoint& p) const {
    if (!contains(p)) {
        std::ostringstream os;
        os << "point (" << p << ") is not on the curve";
        throw DomainError(os.str());
    }
}

CurvePoint Curve::negate(const CurvePoint& p) const {
    require_on_curve(p);
    if (p.is_infinity()) return p;
    return {p.x(), -p.y() - c_.a1 * p.x() - c_.a3};
}

CurvePoint Curve::add(const CurvePoint& p, const CurvePoint& q) const {
    require_on_curve(p);
    require_on_curve(q);
    return add_unchecked(p, q);
}

CurvePoint Curve::add_unchecked(const CurvePoint& p, const CurvePoint& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const Rational& x1 = p.x();
    const Rational& y1 = p.y();
    const Rational& x2 = q.x();
    const Rational& y2 = q.y();

    Rational slope;
    if (x1 == x2) {
        // Same x: either q = -p (vertical chord) or q = p (tangent).
        const Rational tangent_den = Rational(2) * y1 + c_.a1 * x1 + c_.a3;
        if (y1 + y2 + c_.a1 * x2 + c_.a3 == Rational(0) || tangent_den.is_zero()) {
            return CurvePoint::infinity();
        }
        slope = (Rational(3) * x1 * x1 + Rational(2) * c_.a2 * x1 + c_.a4 - c_.a1 * y1) / tangent_den;
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }

    const Rational intercept = y1 - slope * x1;
    const Rational x3 = slope * slope + c_.a1 * slope - c_.a2 - x1 - x2;
    const Rational y3 = -(slope + c_.a1) * x3 - intercept - c_.a3;
    return {x3, y3};
}

CurvePoint Curve::scalar_mul(std::int64_t m, const CurvePoint& p) const {
    require_on_curve(p);
    CurvePoint base = m < 0 ? negate(p) : p;
    // Magnitude as unsigned so INT64_MIN is representable.
    auto k = m < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);

    CurvePoint acc;
    while (k != 0) {
        if (k & 1U) acc = add_unchecked(acc, base);
        k >>= 1U;
        if (k != 0) base = add_unchecked(base, base);
    }
    return acc;
}

const Curve& curve_E() {
    static const Curve e(WeierstrassCoefficients{
        .a1 = Rational(-3), .a2 = Rational(6), .a3 = Rational(-12), .a4 = Rational(8), .a6 = Rational(0)});
    return e;
}

const CurvePoint& generator_P() {
    static const CurvePoint p(Rational(0), Rational(0));
    return p;
}

const CurvePoint& torsion_T() {
    static const CurvePoint t(Rational(-4), Rational(0));
    return t;
}

}  // namespace trirhombus
