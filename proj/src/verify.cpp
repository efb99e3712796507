#include "trirhombus/verify.hpp"

#include <algorithm>

namespace trirhombus {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.informational || c.passed; });
}

std::vector<std::string> VerificationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (!c.informational && !c.passed) out.push_back(c.name);
    }
    return out;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

VerificationReport verify_certificate(const PairCertificate& cert) {
    VerificationReport report;
    auto check = [&report](std::string name, bool ok, bool informational = false) {
        report.checks.push_back({std::move(name), ok, informational});
    };

    const Integer& a = cert.tri_a;
    const Integer& b = cert.tri_b;
    const Integer& c = cert.tri_c;
    const Integer& s = cert.rhombus_side;
    const Rational& sin_t = cert.sin_theta;
    const Rational& cos_t = cert.cos_theta;
    const Rational one(1);
    const Rational two(2);

    check("positive_sides", a > 0 && b > 0 && c > 0 && s > 0 && cert.scale_lambda > 0 && cert.common_perimeter > 0);
    check("pythagoras", a * a + b * b == c * c);
    check("perimeter_triangle", a + b + c == cert.common_perimeter);
    check("perimeter_rhombus", 4 * s == cert.common_perimeter);
    check("area_triangle", Rational(Integer(a * b), Integer(2)) == cert.common_area);
    check("area_rhombus", Rational(Integer(s * s)) * sin_t == cert.common_area);
    check("trig_identity", sin_t * sin_t + cos_t * cos_t == one);
    check("angle_range", sin_t > Rational(0) && sin_t < one && cos_t >= Rational(0) && cos_t < one);

    const Rational& u = cert.u;
    const Rational& v = cert.v_canonical;
    const bool window = u > Rational(0) && u < one && v > Rational(0) && v < one;
    check("param_window", window);
    check("biquadratic", biquadratic_residual(u, v).is_zero());

    // Before scaling: triangle (1-u^2, 2u, 1+u^2) against rhombus side p = (1+u)/2.
    const Rational p = (one + u) / two;
    check("unscaled_system", u * (one - u * u) == p * p * sin_t && one + u == two * p);

    const Rational vv = v * v;
    check("angle_matches_param", sin_t == two * v / (one + vv) && cos_t == (one - vv) / (one + vv));

    const Rational lam(cert.scale_lambda);
    check("scale_consistency", cert.scale_lambda > 0 && lam * (one - u * u) == Rational(a) &&
                                   lam * two * u == Rational(b) && lam * (one + u * u) == Rational(c) &&
                                   lam * p == Rational(s));

    Integer g = gcd(gcd(a, b), gcd(c, s));
    g = gcd(g, cert.scale_lambda);
    check("minimal_scale", g == 1, /*informational=*/true);

    return report;
}

}  // namespace trirhombus
