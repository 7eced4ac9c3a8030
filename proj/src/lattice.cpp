#include "smb/lattice.hpp"

#include "smb/errors.hpp"

#include <functional>
#include <limits>

namespace smb {

void validate(const LatticeModel& L) {
    if (L.q < 2) throw ValidationError("lattice q must be at least 2");
    for (std::size_t i = 1; i < L.generators.size(); ++i)
        if (L.generators[i] > L.generators[i - 1])
            throw ValidationError("lattice generator valuations must be non-increasing");
    if (L.kind == PlaceKind::Infinite && L.w0 >= 0) throw ValidationError("w0 must be negative at an infinite place");
    if (L.kind == PlaceKind::Finite) {
        if (L.reduced_rank < 1) throw ValidationError("finite-place lattice needs reduced rank >= 1");
        for (auto& g : L.generators)
            if (g >= 0) throw ValidationError("Tate lattice generators must have negative valuation");
    }
}

namespace {

constexpr std::uint64_t kMaxCount = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMaxCount / a) throw BudgetExceeded("lattice enumeration count overflows");
    return a * b;
}

// Valuation of a * omega with deg a = k.
Rational generator_value(const LatticeModel& L, std::size_t i, std::uint64_t k) {
    if (L.kind == PlaceKind::Infinite) return L.generators[i] + L.w0 * Rational(k);
    return L.generators[i] * Rational(ipow(L.q, static_cast<std::uint64_t>(L.reduced_rank) * k));
}

} // namespace

ValuationProfile lattice_values_above(const LatticeModel& L, const Rational& threshold) {
    validate(L);
    // For each generator, the admissible degrees and their values.
    std::vector<std::vector<Rational>> values(L.generators.size());
    for (std::size_t i = 0; i < L.generators.size(); ++i)
        for (std::uint64_t k = 0;; ++k) {
            Rational v = generator_value(L, i, k);
            if (v <= threshold) break;
            values[i].push_back(std::move(v));
        }
    ValuationProfile out;
    // Elements a with deg a = k: (q - 1) q^k.
    auto count_of_degree = [&](std::uint64_t k) {
        std::uint64_t c = L.q - 1;
        for (std::uint64_t j = 0; j < k; ++j) c = checked_mul(c, L.q);
        return c;
    };
    std::function<void(std::size_t, std::optional<Rational>, std::uint64_t)> rec =
        [&](std::size_t i, std::optional<Rational> cur, std::uint64_t count) {
            if (i == values.size()) {
                if (cur) out.add(*cur, count);
                return;
            }
            rec(i + 1, cur, count);
            for (std::uint64_t k = 0; k < values[i].size(); ++k) {
                const Rational& v = values[i][k];
                std::optional<Rational> next = cur ? std::min(*cur, v) : v;
                rec(i + 1, next, checked_mul(count, count_of_degree(k)));
            }
        };
    rec(0, std::nullopt, 1);
    return out;
}

Rational exp_valuation(const LatticeModel& L, const Rational& v) {
    Rational out = v;
    const ValuationProfile above = lattice_values_above(L, v);
    for (auto& [mu, mult] : above.entries()) out += (v - mu) * Rational(mult);
    return out;
}

SMBProfile lattice_to_division(const LatticeModel& L, int d, int n) {
    if (L.kind != PlaceKind::Infinite) throw ValidationError("lattice_to_division expects an infinite-place lattice");
    const Rational w_un = L.w0 * Rational(n * d);
    SMBProfile out;
    for (auto& g : L.generators) out.push_back(exp_valuation(L, g - w_un));
    return out;
}

SMBProfile lattice_to_division_finite(const LatticeModel& L, const SMBProfile& good_part, int d, int n) {
    if (L.kind != PlaceKind::Finite) throw ValidationError("lattice_to_division_finite expects a finite-place lattice");
    if (static_cast<int>(good_part.size()) != L.reduced_rank)
        throw ValidationError("good-reduction part must have reduced_rank entries");
    SMBProfile out = good_part;
    const Rational scale(ipow(L.q, static_cast<std::uint64_t>(L.reduced_rank) * n * d));
    for (auto& g : L.generators) out.push_back(exp_valuation(L, g / scale));
    return out;
}

bool largeness_holds_infinite(const SMBProfile& division, int d, int n, const Rational& w0) {
    if (division.empty()) return true;
    return Rational(n * d) * (-w0) >= division.front() - division.back();
}

LatticeModel division_to_lattice(const SMBProfile& division, unsigned q, int d, int n, const Rational& w0) {
    if (!largeness_holds_infinite(division, d, n, w0))
        throw HypothesisError("largeness condition fails: |u^n| < |lambda_r|/|lambda_1|");
    LatticeModel L;
    L.kind = PlaceKind::Infinite;
    L.q = q;
    L.w0 = w0;
    const Rational w_un = w0 * Rational(n * d);
    for (auto& l : division) L.generators.push_back(l + w_un);
    return L;
}

FiniteLatticeData division_to_lattice_finite(const SMBProfile& division, int reduced_rank, unsigned q, int d, int n) {
    if (reduced_rank < 1 || reduced_rank > static_cast<int>(division.size()))
        throw ValidationError("reduced rank out of range");
    FiniteLatticeData out;
    out.lattice.kind = PlaceKind::Finite;
    out.lattice.reduced_rank = reduced_rank;
    out.lattice.q = q;
    out.good_part.assign(division.begin(), division.begin() + reduced_rank);
    const Rational scale(ipow(q, static_cast<std::uint64_t>(reduced_rank) * n * d));
    for (std::size_t i = reduced_rank; i < division.size(); ++i) {
        if (division[i] >= 0) throw HypothesisError("lattice part of the division profile must have negative valuation");
        if (i > static_cast<std::size_t>(reduced_rank) && division[i] / division[reduced_rank] >= scale)
            throw HypothesisError("largeness condition fails at the finite place");
        out.lattice.generators.push_back(division[i] * scale);
    }
    return out;
}

} // namespace smb
