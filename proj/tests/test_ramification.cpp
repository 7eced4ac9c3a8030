#include "doctest.h"

#include "smb/errors.hpp"
#include "smb/ramification.hpp"

#include <random>

using namespace smb;

namespace {

using V = std::vector<std::pair<Rational, Rational>>;

PiecewiseLinear random_psi(std::mt19937& rng) {
    V verts{{-1, -1}, {0, 0}};
    Rational x = 0, y = 0, slope = 1;
    const int breaks = static_cast<int>(rng() % 4);
    for (int i = 0; i < breaks; ++i) {
        Rational dx(static_cast<long>(rng() % 5 + 1), static_cast<long>(rng() % 3 + 1));
        dx.canonicalize();
        x += dx;
        y += slope * dx;
        verts.emplace_back(x, y);
        slope *= static_cast<long>(rng() % 3 + 2);
    }
    return PiecewiseLinear::from_vertices(verts, slope);
}

} // namespace

TEST_CASE("infinite wild psi") {
    // w(j) = -3, m = 1: y on [0,1], 2y - 1 beyond
    const auto psi = psi_infinite_wild(2, -3, -1, 1);
    CHECK(psi(Rational(1, 2)) == Rational(1, 2));
    CHECK(psi(1) == 1);
    CHECK(psi(3) == 5);
    CHECK(psi.final_slope() == 2);
    // w(j) = -5, m = 2: breaks 1 and 3, slopes 1, 2, 4
    const auto psi2 = psi_infinite_wild(2, -5, -1, 1);
    const auto [m, breaks] = infinite_wild_breaks(2, -5, -1);
    CHECK(m == 2);
    CHECK(breaks == std::vector<Rational>{3, 1});
    CHECK(psi2.final_slope() == 4);
    CHECK(psi2(1) == 1);
    CHECK(psi2(3) == 5);
    CHECK(psi2.is_convex());
    CHECK(psi2.is_identity_on_unit_interval());
    // E = 3 scales the wild part
    CHECK(psi_infinite_wild(2, -3, -1, 3).final_slope() == 6);
    try {
        psi_infinite_wild(2, -4, -1, 1);
        FAIL("expected a hypothesis failure");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()) == "p divides w(j)");
    }
}

TEST_CASE("splitting field and finite bad psi") {
    auto psi = psi_splitting_field(2, -1, 0, 1);
    CHECK(psi(1) == 1);
    CHECK(psi(2) == 3);
    CHECK(psi_splitting_field(4, -1, 0, 1).final_slope() == 4);
    CHECK(psi_splitting_field(4, -1, 0, 3).final_slope() == 12);
    CHECK(psi_splitting_field(4, -1, 0, 3)(1) == 3);

    psi = psi_finite_bad(2, 1, 1, 1, 1);
    CHECK(psi == PiecewiseLinear::from_vertices(V{{-1, -1}, {0, 0}, {1, 1}}, 2));
    CHECK(psi_finite_bad(2, 1, 2, 1, 1).final_slope() == 4);
    try {
        psi_finite_bad(2, 1, 1, 1, 0);
        FAIL("expected a hypothesis failure");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()) == "good reduction: tame");
    }
}

TEST_CASE("composition") {
    const auto id = PiecewiseLinear::identity();
    const auto f = psi_finite_bad(2, 1, 1, 1, 1);
    CHECK(plf_compose(id, f) == f);
    CHECK(plf_compose(f, id) == f);
    // tame on top of the splitting-field step reproduces the three-piece finite psi
    for (int E : {1, 3}) {
        const auto composed = plf_compose(psi_tame(E), psi_splitting_field(4, -1, 0, 1));
        CHECK(composed == psi_finite_bad(2, 1, 2, E, 1));
    }
    const auto g = psi_splitting_field(2, -1, 0, 1);
    CHECK(plf_compose(f, g).pieces().size() <= 4);
    std::mt19937 rng(17);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_psi(rng), b = random_psi(rng), c = random_psi(rng);
        CHECK(plf_compose(a, plf_compose(b, c)) == plf_compose(plf_compose(a, b), c));
        CHECK(plf_compose(a, b).is_convex());
    }
}

TEST_CASE("piecewise-linear structure") {
    const auto psi = PiecewiseLinear::from_vertices(V{{-1, -1}, {0, 0}, {1, 1}, {2, 3}}, 4);
    // (0,0) joins two pieces of slope 1 and is normalized away
    CHECK(psi.vertices().size() == 3);
    CHECK(psi.inverse(3) == 2);
    CHECK(psi.inverse(psi(Rational(7, 3))) == Rational(7, 3));
    CHECK_THROWS_AS(PiecewiseLinear::from_vertices(V{{0, 0}}, 1), ValidationError);
    CHECK_THROWS(PiecewiseLinear::from_vertices(V{{-1, -1}, {0, 0}, {1, 2}}, 1).validate_psi());
    std::vector<Piece> pieces{{-1, Rational(1), 1, 0}, {1, std::nullopt, 3, 5}};
    CHECK_THROWS_AS(PiecewiseLinear::from_pieces(pieces), ValidationError);
}

TEST_CASE("filtrations") {
    const auto f = filtration_from_psi(psi_infinite_wild(2, -5, -1, 1));
    CHECK(f.g0_order == 4);
    REQUIRE(f.breaks.size() == 2);
    CHECK(f.breaks[0].upper == 1);
    CHECK(f.breaks[0].order == 4);
    CHECK(f.breaks[1].upper == 3);
    CHECK(f.breaks[1].order == 2);
    CHECK(psi_from_filtration(f) == psi_infinite_wild(2, -5, -1, 1));

    const auto s = filtration_from_psi(psi_splitting_field(4, -1, 0, 1));
    REQUIRE(s.breaks.size() == 1);
    CHECK(s.breaks[0].order == 4);
    CHECK(filtration_from_psi(PiecewiseLinear::identity()).breaks.empty());
    CHECK(filtration_from_psi(PiecewiseLinear::identity()).g0_order == 1);
}

TEST_CASE("conductor from breaks") {
    CHECK(conductor_from_breaks({{0, 1}, {1, 2}}, 2) == 1);
    CHECK(conductor_from_breaks({{0, 2}}, 2) == 0);
    CHECK(conductor_from_breaks({{0, 0}, {1, 2}}, 2) == 2);
    const auto steps = rank_steps_from_filtration(filtration_from_psi(psi_infinite_wild(2, -3, -1, 1)), 2, 1);
    CHECK(conductor_from_breaks(steps, 2) == 1);
}
