#include "trirhombus/birational.hpp"

#include <string>

namespace trirhombus {

std::string_view to_string(MapDenominator d) {
    switch (d) {
        case MapDenominator::kV: return "v";
        case MapDenominator::kY: return "y";
        case MapDenominator::kUDenominator: return "4x^2+y^2+16x+16";
    }
    return "?";
}

SingularMapError::SingularMapError(MapDenominator which)
    : DomainError("birational map undefined: denominator " + std::string(to_string(which)) + " vanishes"),
      which_(which) {}

CurvePoint uv_to_xy(const Rational& u, const Rational& v) {
    if (v.is_zero()) throw SingularMapError(MapDenominator::kV);
    const Rational v2 = v * v;
    const Rational x = -(Rational(4) * u * v2 + Rational(4) * u + Rational(4) * v - Rational(4)) / v2;
    const Rational y = -(Rational(8) * u * v2 - Rational(4) * v2 + Rational(8) * u + Rational(8) * v - Rational(8)) /
                       (v2 * v);
    return {x, y};
}

UV xy_to_uv(const CurvePoint& pt) {
    if (pt.is_infinity()) throw DomainError("the point at infinity has no (u, v) image");
    if (!curve_E().contains(pt)) throw DomainError("point is not on E");

    const Rational& x = pt.x();
    const Rational& y = pt.y();
    if (y.is_zero()) throw SingularMapError(MapDenominator::kY);
    const Rational u_den = Rational(4) * x * x + y * y + Rational(16) * x + Rational(16);
    if (u_den.is_zero()) throw SingularMapError(MapDenominator::kUDenominator);

    const Rational u_num = x * x * x + Rational(4) * x * x + Rational(2) * x * y - y * y + Rational(4) * x +
                           Rational(4) * y;
    return {-u_num / u_den, (Rational(2) * x + Rational(4)) / y};
}

}  // namespace trirhombus
