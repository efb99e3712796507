#include <doctest.h>

#include <algorithm>
#include <set>

#include "sample_points.hpp"
#include "trirhombus/birational.hpp"
#include "trirhombus/generator.hpp"
#include "trirhombus/verify.hpp"

using namespace trirhombus;
using trirhombus::testing::q;

namespace {

GeneratorConfig config(std::int64_t max_multiple, bool negatives = false, bool torsion = false) {
    GeneratorConfig cfg;
    cfg.max_multiple = max_multiple;
    cfg.include_negatives = negatives;
    cfg.include_torsion = torsion;
    return cfg;
}

std::set<std::pair<Rational, Rational>> keys(const std::vector<PairCertificate>& certs) {
    std::set<std::pair<Rational, Rational>> out;
    for (const auto& c : certs) out.emplace(c.u, c.v_canonical);
    return out;
}

}  // namespace

TEST_CASE("enumeration order") {
    const auto plain = enumerate_candidates(config(4));
    REQUIRE(plain.size() == 4);
    for (std::int64_t m = 1; m <= 4; ++m) {
        CHECK(plain[m - 1].multiple == m);
        CHECK_FALSE(plain[m - 1].torsion);
    }
    CHECK(plain[0].point == generator_P());
    CHECK(plain[3].point == CurvePoint(q(5920, 4761), q(5576768, 328509)));

    const auto all = enumerate_candidates(config(2, true, true));
    REQUIRE(all.size() == 8);
    const std::vector<std::pair<std::int64_t, bool>> order = {{1, false}, {1, true}, {-1, false}, {-1, true},
                                                              {2, false}, {2, true}, {-2, false}, {-2, true}};
    for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(all[i].multiple == order[i].first);
        CHECK(all[i].torsion == order[i].second);
    }
    CHECK(all[2].point == CurvePoint(q(0), q(12)));

    for (const auto& c : enumerate_candidates(config(12, true, true))) {
        CHECK(curve_E().contains(c.point));
        CurvePoint expected = curve_E().scalar_mul(c.multiple, generator_P());
        if (c.torsion) expected = curve_E().add(expected, torsion_T());
        CHECK(c.point == expected);
    }
}

TEST_CASE("invalid config") {
    CHECK_THROWS_AS(enumerate_candidates(config(0)), DomainError);
    GeneratorConfig cfg = config(3);
    cfg.limit = 0;
    CHECK_THROWS_AS(harvest(cfg), DomainError);
}

TEST_CASE("harvest examples") {
    CHECK(harvest(config(1)).certificates.empty());

    const auto with_neg = harvest(config(4, true));
    const auto small = std::count_if(with_neg.certificates.begin(), with_neg.certificates.end(),
                                     [](const PairCertificate& c) { return c.tri_c == 34; });
    CHECK(small == 1);
    const auto it = std::find_if(with_neg.certificates.begin(), with_neg.certificates.end(),
                                 [](const PairCertificate& c) { return c.tri_c == 34; });
    REQUIRE(it != with_neg.certificates.end());
    CHECK(it->source_multiple == -1);  // -P comes before 2P; 2P is dropped as a duplicate
    CHECK(it->rhombus_side == 20);
    CHECK(it->common_area == q(240));
    CHECK(it->common_perimeter == 80);
    CHECK(with_neg.count(SkipReason::kDuplicate) >= 1);

    const auto paper = harvest(config(4));
    const auto p = std::find_if(paper.certificates.begin(), paper.certificates.end(),
                                [](const PairCertificate& c) { return c.source_multiple == 4; });
    REQUIRE(p != paper.certificates.end());
    CHECK(p->tri_a == 1832642);
    CHECK(p->tri_b == 2439840);
    CHECK(p->tri_c == 3051458);
    CHECK(p->rhombus_side == 1830985);
    CHECK(p->common_area == Rational(Integer("2235676628640")));
    CHECK(p->common_perimeter == 7323940);
}

TEST_CASE("skip accounting") {
    const auto r = harvest(config(3, true, true));
    // m = 1: P singular, P+T -> (1, 0) outside, -P accepted, -P+T singular.
    CHECK(r.count(SkipReason::kSingularMap) == 2);
    CHECK(r.count(SkipReason::kVerifyFailed) == 0);
    CHECK(r.skips.size() + r.certificates.size() == 12);
}

TEST_CASE("limit") {
    GeneratorConfig cfg = config(20, true, true);
    cfg.limit = 3;
    const auto limited = harvest(cfg);
    CHECK(limited.certificates.size() == 3);
    cfg.limit.reset();
    const auto full = harvest(cfg);
    REQUIRE(full.certificates.size() > 3);
    CHECK(std::equal(limited.certificates.begin(), limited.certificates.end(), full.certificates.begin()));
}

TEST_CASE("soundness, dedup, monotone coverage, provenance") {
    std::set<std::pair<Rational, Rational>> previous;
    for (std::int64_t m = 1; m <= 16; ++m) {
        const auto certs = harvest(config(m, true, true)).certificates;
        const auto k = keys(certs);
        CHECK(k.size() == certs.size());
        CHECK(std::includes(k.begin(), k.end(), previous.begin(), previous.end()));
        previous = k;

        for (const auto& c : certs) {
            CHECK(verify_certificate(c).passed());
            CurvePoint pt = curve_E().scalar_mul(c.source_multiple, generator_P());
            if (c.torsion_added) pt = curve_E().add(pt, torsion_T());
            const UV uv = xy_to_uv(pt);
            CHECK(uv.u == c.u);
            CHECK(canonical_v(uv.v) == c.v_canonical);
        }
    }
    CHECK(previous.size() >= 10);
}

TEST_CASE("harvest output is deterministic") {
    const auto cfg = config(10, true, true);
    CHECK(harvest(cfg).certificates == harvest(cfg).certificates);
}
