#ifndef TRIRHOMBUS_ORACLE_HPP
#define TRIRHOMBUS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trirhombus/birational.hpp"
#include "trirhombus/curve.hpp"

namespace trirhombus {

/**
 * Brute-force solutions of the biquadratic with 0 < u, v < 1, found without
 * touching the curve.
 *
 * For every u = a/b in lowest terms with 0 < a < b <= max_den, the equation
 * is the quadratic A v^2 + B v + A = 0 with A = 2u(u - 1), B = u + 1. Its
 * rational roots are exactly those where B^2 - 4A^2 is a rational square.
 * The root product is 1, so at most one root lands in (0, 1). The bound
 * applies to u only; v may have any denominator.
 *
 * Output is sorted by (b, a). Per-u work is split over `threads` workers
 * (0 picks hardware concurrency); the result does not depend on it.
 */
std::vector<UV> sweep(std::int64_t max_den, unsigned threads = 1);

struct CrossCheckEntry {
    UV solution;
    std::optional<CurvePoint> image;  // empty when the map was undefined
    bool on_curve = false;
    std::string error;
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries;

    bool all_on_curve() const;
};

/// Maps each (u, v) through uv_to_xy and tests membership on E.
CrossCheckReport cross_check(const std::vector<UV>& solutions);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_ORACLE_HPP
