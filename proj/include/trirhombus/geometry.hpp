#ifndef TRIRHOMBUS_GEOMETRY_HPP
#define TRIRHOMBUS_GEOMETRY_HPP

#include <cstdint>

#include "trirhombus/rational.hpp"

namespace trirhombus {

/// 2u^2v^2 - 2uv^2 + 2u^2 + uv - 2u + v. Vanishes exactly on the
/// biquadratic left after eliminating the rhombus side from the
/// common-perimeter / common-area system.
Rational biquadratic_residual(const Rational& u, const Rational& v);

/// Rational right triangle with legs (leg_a, leg_b) and hypotenuse hyp_c.
/// Sides keep construction order; they are not sorted.
class RightTriangle {
public:
    /// Throws DomainError unless all sides are positive and a^2 + b^2 = c^2.
    RightTriangle(Rational leg_a, Rational leg_b, Rational hyp_c);

    const Rational& leg_a() const { return a_; }
    const Rational& leg_b() const { return b_; }
    const Rational& hyp_c() const { return c_; }

    Rational perimeter() const { return a_ + b_ + c_; }
    Rational area() const { return a_ * b_ / Rational(2); }

    friend bool operator==(const RightTriangle&, const RightTriangle&) = default;

private:
    Rational a_, b_, c_;
};

/// Rhombus with rational side and an intersection angle in (0, pi/2] whose
/// sine and cosine are both rational.
class Rhombus {
public:
    /// Throws DomainError unless side > 0, sin^2 + cos^2 = 1, 0 < sin <= 1
    /// and 0 <= cos < 1.
    Rhombus(Rational side, Rational sin_theta, Rational cos_theta);

    const Rational& side() const { return side_; }
    const Rational& sin_theta() const { return sin_; }
    const Rational& cos_theta() const { return cos_; }

    Rational perimeter() const { return Rational(4) * side_; }
    Rational area() const { return side_ * side_ * sin_; }

    friend bool operator==(const Rhombus&, const Rhombus&) = default;

private:
    Rational side_, sin_, cos_;
};

/// min(v, 1/v). The rhombus angle only depends on this value.
Rational canonical_v(const Rational& v);

/**
 * A rational solution (u, v) of the biquadratic inside the usable window:
 * 0 < u < 1, v > 0, v != 1. v_canonical() folds v > 1 onto (0, 1).
 */
class ParamPair {
public:
    /// Throws DomainError if any window condition fails or residual != 0.
    ParamPair(Rational u, Rational v);

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const Rational& v_canonical() const { return v_canonical_; }

private:
    Rational u_, v_, v_canonical_;
};

/// Sides (1 - u^2, 2u, 1 + u^2); requires 0 < u < 1.
RightTriangle triangle_from_u(const Rational& u);

/// Side (1 + u)/2 and angle with sin = 2v*/(1 + v*^2), v* = min(v, 1/v).
/// Requires 0 < u < 1, v > 0, v != 1.
Rhombus rhombus_from_uv(const Rational& u, const Rational& v);

struct IntegralScaling {
    Integer lambda;
    Integer leg_a, leg_b, hyp_c;
    Integer rhombus_side;
};

/// Least positive integer lambda that makes all four lengths integral
/// (lcm of their denominators), with the scaled lengths.
IntegralScaling scale_to_integral(const RightTriangle& tri, const Rhombus& rho);

/// Fully materialized integral pair. Plain data: a certificate read from a
/// file may violate any of its invariants, which is what verify_certificate
/// reports on.
struct PairCertificate {
    Integer tri_a, tri_b, tri_c;
    Integer rhombus_side;
    Rational sin_theta, cos_theta;
    Integer common_perimeter;
    Rational common_area;
    Integer scale_lambda;
    std::int64_t source_multiple = 0;
    bool torsion_added = false;
    Rational u, v_canonical;

    friend bool operator==(const PairCertificate&, const PairCertificate&) = default;
};

PairCertificate build_certificate(const ParamPair& param, std::int64_t source_multiple, bool torsion_added);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_GEOMETRY_HPP
