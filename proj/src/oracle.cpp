#include "trirhombus/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "trirhombus/geometry.hpp"

namespace trirhombus {

namespace {

// Solutions for all u with denominator in [den_lo, den_hi), ordered by (b, a).
std::vector<UV> sweep_band(std::int64_t den_lo, std::int64_t den_hi) {
    std::vector<UV> out;
    const Rational zero(0);
    const Rational one(1);
    for (std::int64_t b = den_lo; b < den_hi; ++b) {
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Rational u(a, b);
            const Rational quad = Rational(2) * u * (u - one);  // leading and constant coefficient
            const Rational lin = u + one;
            const Rational disc = lin * lin - Rational(4) * quad * quad;
            if (!is_rational_square(disc)) continue;
            const Rational root = rational_sqrt(disc);
            const Rational denom = Rational(2) * quad;
            for (const Rational& v : {(-lin + root) / denom, (-lin - root) / denom}) {
                if (v > zero && v < one) {
                    out.push_back({u, v});
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<UV> sweep(std::int64_t max_den, unsigned threads) {
    if (max_den < 1) throw DomainError("max_den must be at least 1");
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const auto n = static_cast<std::int64_t>(threads);
    if (n == 1 || max_den < 2 * n) return sweep_band(2, max_den + 1);

    // Interleaved bands would break ordering; contiguous bands are merged in order.
    std::vector<std::future<std::vector<UV>>> parts;
    const std::int64_t span = (max_den - 1 + n - 1) / n;
    for (std::int64_t lo = 2; lo <= max_den; lo += span) {
        const std::int64_t hi = std::min(lo + span, max_den + 1);
        parts.push_back(std::async(std::launch::async, sweep_band, lo, hi));
    }
    std::vector<UV> out;
    for (auto& f : parts) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

bool CrossCheckReport::all_on_curve() const {
    return std::all_of(entries.begin(), entries.end(), [](const CrossCheckEntry& e) { return e.on_curve; });
}

CrossCheckReport cross_check(const std::vector<UV>& solutions) {
    CrossCheckReport report;
    for (const UV& s : solutions) {
        CrossCheckEntry entry{s, std::nullopt, false, {}};
        try {
            CurvePoint pt = uv_to_xy(s.u, s.v);
            entry.on_curve = curve_E().contains(pt);
            if (!entry.on_curve) entry.error = "image is not on E";
            entry.image = std::move(pt);
        } catch (const DomainError& e) {
            entry.error = e.what();
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace trirhombus
