#include "trirhombus/generator.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "trirhombus/birational.hpp"
#include "trirhombus/verify.hpp"

namespace trirhombus {

void GeneratorConfig::validate() const {
    if (max_multiple < 1) throw DomainError("max_multiple must be at least 1");
    if (limit && *limit == 0) throw DomainError("limit must be positive");
}

CandidateEnumerator::CandidateEnumerator(GeneratorConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

std::optional<Candidate> CandidateEnumerator::next() {
    if (pending_.empty()) {
        if (m_ >= cfg_.max_multiple) return std::nullopt;
        ++m_;
        const Curve& e = curve_E();
        pos_ = e.add(pos_, generator_P());
        std::vector<Candidate> batch;
        batch.push_back({m_, false, pos_});
        if (cfg_.include_torsion) batch.push_back({m_, true, e.add(pos_, torsion_T())});
        if (cfg_.include_negatives) {
            neg_ = e.negate(pos_);
            batch.push_back({-m_, false, neg_});
            if (cfg_.include_torsion) batch.push_back({-m_, true, e.add(neg_, torsion_T())});
        }
        pending_.assign(std::make_move_iterator(batch.rbegin()), std::make_move_iterator(batch.rend()));
    }
    Candidate c = std::move(pending_.back());
    pending_.pop_back();
    return c;
}

std::vector<Candidate> enumerate_candidates(const GeneratorConfig& cfg) {
    CandidateEnumerator it(cfg);
    std::vector<Candidate> out;
    while (auto c = it.next()) out.push_back(std::move(*c));
    return out;
}

std::string_view to_string(SkipReason r) {
    switch (r) {
        case SkipReason::kInfinity: return "infinity";
        case SkipReason::kSingularMap: return "singular-map";
        case SkipReason::kOutsideWindow: return "outside-window";
        case SkipReason::kDuplicate: return "duplicate";
        case SkipReason::kVerifyFailed: return "verify-failed";
    }
    return "?";
}

std::size_t HarvestResult::count(SkipReason r) const {
    return static_cast<std::size_t>(
        std::count_if(skips.begin(), skips.end(), [r](const Skip& s) { return s.reason == r; }));
}

HarvestResult harvest(const GeneratorConfig& cfg) {
    HarvestResult result;
    std::set<std::pair<Rational, Rational>> seen;
    CandidateEnumerator candidates(cfg);

    while (auto cand = candidates.next()) {
        if (cfg.limit && result.certificates.size() >= *cfg.limit) break;
        auto skip = [&](SkipReason reason, std::string detail) {
            result.skips.push_back({cand->multiple, cand->torsion, reason, std::move(detail)});
        };

        if (cand->point.is_infinity()) {
            skip(SkipReason::kInfinity, {});
            continue;
        }
        UV uv;
        try {
            uv = xy_to_uv(cand->point);
        } catch (const SingularMapError& e) {
            skip(SkipReason::kSingularMap, std::string(to_string(e.which())));
            continue;
        }
        if (uv.u <= Rational(0) || uv.u >= Rational(1) || uv.v <= Rational(0) || uv.v == Rational(1)) {
            skip(SkipReason::kOutsideWindow, "u=" + uv.u.str() + " v=" + uv.v.str());
            continue;
        }

        const ParamPair param(uv.u, uv.v);
        if (!seen.emplace(param.u(), param.v_canonical()).second) {
            skip(SkipReason::kDuplicate, "u=" + param.u().str() + " v*=" + param.v_canonical().str());
            continue;
        }
        PairCertificate cert = build_certificate(param, cand->multiple, cand->torsion);
        if (const auto report = verify_certificate(cert); !report.passed()) {
            skip(SkipReason::kVerifyFailed, report.failures().front());
            continue;
        }
        result.certificates.push_back(std::move(cert));
    }
    return result;
}

}  // namespace trirhombus
