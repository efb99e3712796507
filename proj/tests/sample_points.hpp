// Test helpers: the sample set {mP + eT} built by repeated addition only,
// so scalar_mul is not on the path that produces expected values.
#pragma once

#include <cstdint>
#include <vector>

#include "trirhombus/curve.hpp"

namespace trirhombus::testing {

struct Sample {
    std::int64_t m;
    bool torsion;
    CurvePoint point;
};

inline std::vector<Sample> multiples_by_repeated_addition(std::int64_t max_abs_m) {
    const Curve& e = curve_E();
    std::vector<Sample> out;
    CurvePoint pos;  // mP
    CurvePoint neg;  // -mP
    const CurvePoint minus_p = e.negate(generator_P());
    out.push_back({0, false, pos});
    out.push_back({0, true, torsion_T()});
    for (std::int64_t m = 1; m <= max_abs_m; ++m) {
        pos = e.add(pos, generator_P());
        neg = e.add(neg, minus_p);
        out.push_back({m, false, pos});
        out.push_back({m, true, e.add(pos, torsion_T())});
        out.push_back({-m, false, neg});
        out.push_back({-m, true, e.add(neg, torsion_T())});
    }
    return out;
}

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace trirhombus::testing
