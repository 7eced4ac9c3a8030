#include "doctest.h"

#include "smb/errors.hpp"
#include "smb/lattice.hpp"

using namespace smb;

namespace {

ValuationProfile profile(std::vector<std::pair<Rational, std::uint64_t>> v) {
    ValuationProfile p;
    for (auto& [val, m] : v) p.add(val, m);
    return p;
}

LatticeModel infinite_lattice(std::vector<Rational> g, unsigned q = 2) {
    LatticeModel L;
    L.kind = PlaceKind::Infinite;
    L.generators = std::move(g);
    L.q = q;
    L.reduced_rank = 0;
    return L;
}

LatticeModel tate_lattice(std::vector<Rational> g, int reduced_rank, unsigned q = 2) {
    LatticeModel L;
    L.kind = PlaceKind::Finite;
    L.generators = std::move(g);
    L.reduced_rank = reduced_rank;
    L.q = q;
    return L;
}

// Brute force over coefficient vectors of degree < 3 for a rank-2 infinite lattice.
ValuationProfile brute_force_above(const LatticeModel& L, const Rational& threshold) {
    ValuationProfile out;
    const unsigned q = L.q;
    const unsigned per = q * q * q;
    auto value = [&](unsigned code, const Rational& g) -> std::optional<Rational> {
        int deg = -1;
        for (int i = 0; code; ++i, code /= q)
            if (code % q) deg = i;
        if (deg < 0) return std::nullopt;
        return g + L.w0 * deg;
    };
    for (unsigned a = 0; a < per; ++a)
        for (unsigned b = 0; b < per; ++b) {
            auto va = value(a, L.generators[0]), vb = value(b, L.generators[1]);
            if (!va && !vb) continue;
            const Rational v = !va ? *vb : !vb ? *va : std::min(*va, *vb);
            if (v > threshold) out.add(v);
        }
    return out;
}

} // namespace

TEST_CASE("lattice values above a threshold") {
    const auto L = infinite_lattice({-1, Rational(-3, 2)});
    const auto above = lattice_values_above(L, -3);
    CHECK(above == profile({{-1, 1}, {Rational(-3, 2), 2}, {-2, 4}, {Rational(-5, 2), 8}}));
    CHECK(above == brute_force_above(L, -3));
    CHECK(lattice_values_above(infinite_lattice({-1, Rational(-3, 2)}, 3), Rational(-7, 2)) ==
          brute_force_above(infinite_lattice({-1, Rational(-3, 2)}, 3), Rational(-7, 2)));
    // monotone in the threshold
    CHECK(lattice_values_above(L, -4).contains(above));
    CHECK(lattice_values_above(tate_lattice({Rational(-1, 2)}, 1), -3) ==
          profile({{Rational(-1, 2), 1}, {-1, 2}, {-2, 4}}));
    CHECK(lattice_values_above(infinite_lattice({}), -3).empty());
}

TEST_CASE("exp valuation") {
    const auto T = tate_lattice({Rational(-1, 2)}, 1);
    CHECK(exp_valuation(T, Rational(-1, 4)) == Rational(-1, 4));
    CHECK(exp_valuation(T, -1) == Rational(-3, 2));
    const auto L = infinite_lattice({-1, Rational(-3, 2)});
    CHECK(exp_valuation(L, 0) == 0);
}

TEST_CASE("dictionary at the infinite place") {
    const auto L = infinite_lattice({-1, Rational(-3, 2)});
    for (int n = 1; n <= 4; ++n) {
        const auto div = lattice_to_division(L, 1, n);
        CHECK(div == SMBProfile{Rational(n - 1), Rational(2 * n - 3, 2)});
        const auto back = division_to_lattice(div, 2, 1, n);
        CHECK(back.generators == L.generators);
    }
    // largeness fails: 1 < 0 - (-3/2)
    CHECK_THROWS_AS(division_to_lattice({0, Rational(-3, 2)}, 2, 1, 1), HypothesisError);
    CHECK(largeness_holds_infinite({0, Rational(-1, 2)}, 1, 1));
}

TEST_CASE("dictionary at a finite place") {
    for (int n = 1; n <= 3; ++n) {
        const SMBProfile div{0, Rational(-1, 1 << n)};
        const auto data = division_to_lattice_finite(div, 1, 2, 1, n);
        CHECK(data.good_part == SMBProfile{0});
        CHECK(data.lattice.generators == std::vector<Rational>{-1});
        CHECK(lattice_to_division_finite(data.lattice, data.good_part, 1, n) == div);
    }
    CHECK_THROWS_AS(division_to_lattice_finite({0, 1}, 1, 2, 1, 1), HypothesisError);
}

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(lattice_values_above(infinite_lattice({-2, -1}), -3), ValidationError);
    CHECK_THROWS_AS(lattice_values_above(tate_lattice({1}, 1), -3), ValidationError);
}
