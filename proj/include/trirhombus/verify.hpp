#ifndef TRIRHOMBUS_VERIFY_HPP
#define TRIRHOMBUS_VERIFY_HPP

#include <string>
#include <vector>

#include "trirhombus/geometry.hpp"

namespace trirhombus {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Informational checks are reported but do not affect VerificationReport::passed().
    bool informational = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Names of failing gating checks.
    std::vector<std::string> failures() const;
    const CheckResult* find(const std::string& name) const;
};

/**
 * Re-derives every certificate property from the stored fields with direct
 * exact arithmetic. Nothing from the construction path is reused, so a
 * certificate built by a buggy pipeline (or edited by hand) is caught here.
 *
 * Gating checks:
 *   positive_sides, pythagoras, perimeter_triangle, perimeter_rhombus,
 *   area_triangle, area_rhombus, trig_identity, angle_range, param_window,
 *   biquadratic, unscaled_system, angle_matches_param, scale_consistency
 *
 * Informational: minimal_scale (gcd(a, b, c, side, lambda) = 1). A
 * certificate scaled up by k still describes a valid pair; it is only no
 * longer primitive.
 */
VerificationReport verify_certificate(const PairCertificate& cert);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_VERIFY_HPP
