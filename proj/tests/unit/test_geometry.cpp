#include <doctest.h>

#include <random>

#include "sample_points.hpp"
#include "trirhombus/birational.hpp"
#include "trirhombus/geometry.hpp"

using namespace trirhombus;
using trirhombus::testing::q;

namespace {

// Random rational in (lo, hi) with denominator up to max_den.
Rational random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(lo * den + 1, hi * den - 1);
    return Rational(num_dist(rng), den);
}

}  // namespace

TEST_CASE("biquadratic_residual") {
    CHECK(biquadratic_residual(q(0), q(0)) == q(0));
    CHECK(biquadratic_residual(q(552, 1105), q(483, 1264)) == q(0));
    CHECK(biquadratic_residual(q(1, 2), q(1, 2)) == q(1, 8));
    CHECK(biquadratic_residual(q(3, 5), q(1, 3)) == q(0));
}

TEST_CASE("triangle_from_u") {
    const RightTriangle t = triangle_from_u(q(3, 5));
    CHECK(t.leg_a() == q(16, 25));
    CHECK(t.leg_b() == q(6, 5));
    CHECK(t.hyp_c() == q(34, 25));

    const RightTriangle paper = triangle_from_u(q(552, 1105));
    CHECK(paper.leg_a() == q(916321, 1221025));
    CHECK(paper.leg_b() == q(1104, 1105));
    CHECK(paper.hyp_c() == q(1525729, 1221025));

    CHECK_THROWS_AS(triangle_from_u(q(1)), DomainError);
    CHECK_THROWS_AS(triangle_from_u(q(0)), DomainError);
    CHECK_THROWS_AS(triangle_from_u(q(3, 2)), DomainError);
}

TEST_CASE("RightTriangle and Rhombus reject invalid shapes") {
    CHECK_THROWS_AS(RightTriangle(q(3), q(4), q(6)), DomainError);
    CHECK_THROWS_AS(RightTriangle(q(-3), q(4), q(5)), DomainError);
    CHECK_NOTHROW(RightTriangle(q(3), q(4), q(5)));
    CHECK_THROWS_AS(Rhombus(q(1), q(3, 5), q(3, 5)), DomainError);
    CHECK_THROWS_AS(Rhombus(q(1), q(3, 5), q(-4, 5)), DomainError);  // obtuse
    CHECK_THROWS_AS(Rhombus(q(0), q(3, 5), q(4, 5)), DomainError);
    CHECK_NOTHROW(Rhombus(q(1), q(1), q(0)));
}

TEST_CASE("rhombus_from_uv") {
    const Rhombus r = rhombus_from_uv(q(3, 5), q(1, 3));
    CHECK(r.side() == q(4, 5));
    CHECK(r.sin_theta() == q(3, 5));
    CHECK(r.cos_theta() == q(4, 5));
    CHECK(rhombus_from_uv(q(3, 5), q(3)) == r);

    const Rhombus paper = rhombus_from_uv(q(552, 1105), q(483, 1264));
    CHECK(paper.side() == q(1657, 2210));
    CHECK(paper.sin_theta() == q(1221024, 1830985));

    CHECK_THROWS_AS(rhombus_from_uv(q(3, 5), q(1)), DomainError);
    CHECK_THROWS_AS(rhombus_from_uv(q(3, 5), q(0)), DomainError);
    CHECK_THROWS_AS(rhombus_from_uv(q(3, 5), q(-1, 3)), DomainError);
}

TEST_CASE("scale_to_integral") {
    const auto small = scale_to_integral(triangle_from_u(q(3, 5)), rhombus_from_uv(q(3, 5), q(1, 3)));
    CHECK(small.lambda == 25);
    CHECK(small.leg_a == 16);
    CHECK(small.leg_b == 30);
    CHECK(small.hyp_c == 34);
    CHECK(small.rhombus_side == 20);

    const auto paper = scale_to_integral(triangle_from_u(q(552, 1105)), rhombus_from_uv(q(552, 1105), q(483, 1264)));
    CHECK(paper.lambda == 2442050);
    CHECK(paper.leg_a == 1832642);
    CHECK(paper.leg_b == 2439840);
    CHECK(paper.hyp_c == 3051458);
    CHECK(paper.rhombus_side == 1830985);

    const auto unit = scale_to_integral(RightTriangle(q(3), q(4), q(5)), Rhombus(q(3), q(3, 5), q(4, 5)));
    CHECK(unit.lambda == 1);
    CHECK(unit.leg_a == 3);
    CHECK(unit.rhombus_side == 3);
}

TEST_CASE("ParamPair window") {
    const ParamPair p(q(3, 5), q(3));
    CHECK(p.v_canonical() == q(1, 3));
    CHECK(p.v() == q(3));
    CHECK_THROWS_AS(ParamPair(q(3, 5), q(1, 2)), DomainError);  // residual != 0
    CHECK_THROWS_AS(ParamPair(q(3, 5), q(1)), DomainError);
    CHECK_THROWS_AS(ParamPair(q(24, 17), q(-21, 16)), DomainError);  // on the curve, outside window
}

TEST_CASE("build_certificate") {
    const PairCertificate small = build_certificate(ParamPair(q(3, 5), q(1, 3)), -1, false);
    CHECK(small.tri_a == 16);
    CHECK(small.tri_b == 30);
    CHECK(small.tri_c == 34);
    CHECK(small.rhombus_side == 20);
    CHECK(small.sin_theta == q(3, 5));
    CHECK(small.common_perimeter == 80);
    CHECK(small.common_area == q(240));
    CHECK(small.scale_lambda == 25);
    CHECK(small.source_multiple == -1);
    // 16^2 + 30^2 = 34^2 and 16*30/2 = 240 = 20^2 * 3/5.
    CHECK(16 * 16 + 30 * 30 == 34 * 34);
    CHECK(20 * 20 * 3 == 240 * 5);

    const PairCertificate paper = build_certificate(ParamPair(q(552, 1105), q(483, 1264)), 4, false);
    CHECK(paper.tri_a == 1832642);
    CHECK(paper.tri_b == 2439840);
    CHECK(paper.tri_c == 3051458);
    CHECK(paper.rhombus_side == 1830985);
    CHECK(paper.common_perimeter == 7323940);
    CHECK(paper.common_area == Rational(Integer("2235676628640")));
    CHECK(paper.sin_theta == q(1221024, 1830985));

    CHECK_THROWS_AS(build_certificate(ParamPair(q(3, 5), q(1)), 0, false), DomainError);
}

TEST_CASE("elimination equivalence on random rationals") {
    std::mt19937_64 rng(20160125);
    int zeros = 0;
    auto agree = [&](const Rational& u, const Rational& v) {
        const Rational p = (q(1) + u) / q(2);
        const Rational sin_t = q(2) * v / (q(1) + v * v);
        const bool system = u * (q(1) - u * u) == p * p * sin_t;
        const bool residual = biquadratic_residual(u, v).is_zero();
        zeros += residual;
        return system == residual;
    };
    for (int i = 0; i < 1500; ++i) {
        const Rational u = random_rational(rng, 0, 1, 200);
        const Rational v = random_rational(rng, 0, 5, 200);
        REQUIRE(agree(u, v));
    }
    // Random draws essentially never hit the curve; feed it known solutions too.
    for (const auto& s : trirhombus::testing::multiples_by_repeated_addition(15)) {
        try {
            const UV uv = xy_to_uv(s.point);
            if (uv.u > q(0) && uv.u < q(1) && uv.v > q(0)) REQUIRE(agree(uv.u, uv.v));
        } catch (const DomainError&) {
        }
    }
    CHECK(zeros > 20);
}

TEST_CASE("reciprocal symmetry: residual(u, 1/v) v^2 = residual(u, v)") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const Rational u = random_rational(rng, -3, 3, 50);
        Rational v = random_rational(rng, -4, 4, 50);
        if (v.is_zero()) v = q(1, 7);
        REQUIRE(biquadratic_residual(u, reciprocal(v)) * v * v == biquadratic_residual(u, v));
    }
}
