#ifndef TRIRHOMBUS_GENERATOR_HPP
#define TRIRHOMBUS_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trirhombus/curve.hpp"
#include "trirhombus/geometry.hpp"

namespace trirhombus {

struct GeneratorConfig {
    std::int64_t max_multiple = 1;
    bool include_torsion = false;
    bool include_negatives = false;
    std::optional<std::size_t> limit;

    /// Throws DomainError if max_multiple < 1 or limit == 0.
    void validate() const;
};

/// The curve point m*P + torsion*T.
struct Candidate {
    std::int64_t multiple = 0;
    bool torsion = false;
    CurvePoint point;
};

/**
 * Walks m*P (+T) in a fixed order: for m = 1, 2, ..., max_multiple emit
 * mP, mP+T, -mP, -mP+T, dropping the torsion and negative entries when they
 * are not configured. Points are built incrementally by one addition each.
 */
class CandidateEnumerator {
public:
    explicit CandidateEnumerator(GeneratorConfig cfg);

    std::optional<Candidate> next();

private:
    GeneratorConfig cfg_;
    std::int64_t m_ = 0;
    CurvePoint pos_;  // m*P
    CurvePoint neg_;  // -m*P
    std::vector<Candidate> pending_;  // current m, reversed
};

std::vector<Candidate> enumerate_candidates(const GeneratorConfig& cfg);

enum class SkipReason {
    kInfinity,         // candidate is the point at infinity
    kSingularMap,      // a map denominator vanished
    kOutsideWindow,    // u not in (0,1), or v <= 0, or v == 1
    kDuplicate,        // (u, v_canonical) already emitted
    kVerifyFailed      // should never happen; kept so it is visible if it does
};

std::string_view to_string(SkipReason r);

struct Skip {
    std::int64_t multiple = 0;
    bool torsion = false;
    SkipReason reason = SkipReason::kInfinity;
    std::string detail;
};

struct HarvestResult {
    std::vector<PairCertificate> certificates;  // enumeration order
    std::vector<Skip> skips;

    std::size_t count(SkipReason r) const;
};

/// Every candidate is mapped to (u, v), filtered to the window, canonicalized,
/// built into a certificate, and independently verified before it is kept.
/// Deduplication is on (u, v_canonical); the first candidate in enumeration
/// order wins.
HarvestResult harvest(const GeneratorConfig& cfg);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_GENERATOR_HPP
