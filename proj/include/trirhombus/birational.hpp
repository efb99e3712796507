#ifndef TRIRHOMBUS_BIRATIONAL_HPP
#define TRIRHOMBUS_BIRATIONAL_HPP

#include <string_view>

#include "trirhombus/curve.hpp"
#include "trirhombus/rational.hpp"

namespace trirhombus {

/// Which denominator of the (u,v) <-> (x,y) correspondence vanished.
enum class MapDenominator {
    kV,            // v, in x = .../v^2 and y = .../v^3
    kY,            // y, in v = (2x + 4)/y
    kUDenominator  // 4x^2 + y^2 + 16x + 16, in u
};

std::string_view to_string(MapDenominator d);

/// An input on the exceptional locus of the birational maps.
class SingularMapError : public DomainError {
public:
    explicit SingularMapError(MapDenominator which);
    MapDenominator which() const { return which_; }

private:
    MapDenominator which_;
};

struct UV {
    Rational u;
    Rational v;

    friend bool operator==(const UV&, const UV&) = default;
};

/// (u, v) -> (x, y) on E:
///   x = -(4uv^2 + 4u + 4v - 4) / v^2
///   y = -(8uv^2 - 4v^2 + 8u + 8v - 8) / v^3
/// The image is on E whenever (u, v) lies on the biquadratic; off it the
/// result is returned as-is and will generally fail curve_E().contains().
CurvePoint uv_to_xy(const Rational& u, const Rational& v);

/// (x, y) on E -> (u, v) on the biquadratic:
///   u = -(x^3 + 4x^2 + 2xy - y^2 + 4x + 4y) / (4x^2 + y^2 + 16x + 16)
///   v = (2x + 4) / y
/// Throws DomainError for infinity or off-curve input and SingularMapError
/// when a denominator vanishes.
UV xy_to_uv(const CurvePoint& pt);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_BIRATIONAL_HPP
