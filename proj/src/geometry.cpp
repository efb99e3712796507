#include "trirhombus/geometry.hpp"

namespace trirhombus {

namespace {

void require_unit_interval(const Rational& u) {
    if (u <= Rational(0) || u >= Rational(1)) {
        throw DomainError("u must lie strictly between 0 and 1, got " + u.str());
    }
}

void require_usable_v(const Rational& v) {
    if (v <= Rational(0)) throw DomainError("v must be positive, got " + v.str());
    if (v == Rational(1)) throw DomainError("v = 1 (right-angle rhombus) is excluded");
}

}  // namespace

Rational biquadratic_residual(const Rational& u, const Rational& v) {
    const Rational uu = u * u;
    const Rational vv = v * v;
    return Rational(2) * uu * vv - Rational(2) * u * vv + Rational(2) * uu + u * v - Rational(2) * u + v;
}

RightTriangle::RightTriangle(Rational leg_a, Rational leg_b, Rational hyp_c)
    : a_(std::move(leg_a)), b_(std::move(leg_b)), c_(std::move(hyp_c)) {
    if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0) {
        throw DomainError("triangle sides must be positive");
    }
    if (a_ * a_ + b_ * b_ != c_ * c_) throw DomainError("sides do not satisfy a^2 + b^2 = c^2");
}

Rhombus::Rhombus(Rational side, Rational sin_theta, Rational cos_theta)
    : side_(std::move(side)), sin_(std::move(sin_theta)), cos_(std::move(cos_theta)) {
    if (side_.sign() <= 0) throw DomainError("rhombus side must be positive");
    if (sin_ * sin_ + cos_ * cos_ != Rational(1)) throw DomainError("sin^2 + cos^2 != 1");
    if (sin_.sign() <= 0 || sin_ > Rational(1) || cos_.sign() < 0 || cos_ >= Rational(1)) {
        throw DomainError("rhombus angle outside (0, pi/2]");
    }
}

Rational canonical_v(const Rational& v) {
    if (v.sign() <= 0) throw DomainError("v must be positive, got " + v.str());
    return v > Rational(1) ? reciprocal(v) : v;
}

ParamPair::ParamPair(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {
    require_unit_interval(u_);
    require_usable_v(v_);
    if (!biquadratic_residual(u_, v_).is_zero()) {
        throw DomainError("(" + u_.str() + ", " + v_.str() + ") is not on the biquadratic");
    }
    v_canonical_ = canonical_v(v_);
}

RightTriangle triangle_from_u(const Rational& u) {
    require_unit_interval(u);
    const Rational uu = u * u;
    return {Rational(1) - uu, Rational(2) * u, Rational(1) + uu};
}

Rhombus rhombus_from_uv(const Rational& u, const Rational& v) {
    require_unit_interval(u);
    require_usable_v(v);
    const Rational w = canonical_v(v);
    const Rational ww = w * w;
    const Rational den = Rational(1) + ww;
    return {(Rational(1) + u) / Rational(2), Rational(2) * w / den, (Rational(1) - ww) / den};
}

IntegralScaling scale_to_integral(const RightTriangle& tri, const Rhombus& rho) {
    Integer lambda = 1;
    for (const Rational* r : {&tri.leg_a(), &tri.leg_b(), &tri.hyp_c(), &rho.side()}) {
        lambda = lcm(lambda, r->den());
    }
    const auto scaled = [&lambda](const Rational& r) -> Integer {
        return Integer(r.num() * (lambda / r.den()));
    };
    return {lambda, scaled(tri.leg_a()), scaled(tri.leg_b()), scaled(tri.hyp_c()), scaled(rho.side())};
}

PairCertificate build_certificate(const ParamPair& param, std::int64_t source_multiple, bool torsion_added) {
    const RightTriangle tri = triangle_from_u(param.u());
    const Rhombus rho = rhombus_from_uv(param.u(), param.v());
    IntegralScaling s = scale_to_integral(tri, rho);

    PairCertificate cert;
    cert.common_perimeter = s.leg_a + s.leg_b + s.hyp_c;
    cert.common_area = Rational(Integer(s.leg_a * s.leg_b)) / Rational(2);
    cert.tri_a = std::move(s.leg_a);
    cert.tri_b = std::move(s.leg_b);
    cert.tri_c = std::move(s.hyp_c);
    cert.rhombus_side = std::move(s.rhombus_side);
    cert.sin_theta = rho.sin_theta();
    cert.cos_theta = rho.cos_theta();
    cert.scale_lambda = std::move(s.lambda);
    cert.source_multiple = source_multiple;
    cert.torsion_added = torsion_added;
    cert.u = param.u();
    cert.v_canonical = param.v_canonical();
    return cert;
}

}  // namespace trirhombus
