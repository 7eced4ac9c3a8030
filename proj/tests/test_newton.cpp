#include "doctest.h"

#include "smb/drinfeld.hpp"
#include "smb/errors.hpp"
#include "smb/newton.hpp"

using namespace smb;

namespace {

std::vector<std::pair<std::int64_t, Valuation>> pts(std::vector<std::pair<std::int64_t, Rational>> v) {
    std::vector<std::pair<std::int64_t, Valuation>> out;
    for (auto& [x, y] : v) out.emplace_back(x, Valuation(y));
    return out;
}

ValuationProfile profile(std::vector<std::pair<Rational, std::uint64_t>> v) {
    ValuationProfile p;
    for (auto& [val, m] : v) p.add(val, m);
    return p;
}

} // namespace

TEST_CASE("lower hulls") {
    auto h = lower_hull(pts({{0, -1}, {1, -1}, {3, 0}}));
    REQUIRE(h.vertices.size() == 3);
    CHECK(h.slope(0) == 0);
    CHECK(h.slope(1) == Rational(1, 2));
    h = lower_hull(pts({{0, 0}, {1, 5}, {2, 0}}));
    CHECK(h.vertices == std::vector<HullPoint>{{0, 0}, {2, 0}});
    h = lower_hull(pts({{0, -1}, {3, 0}}));
    REQUIRE(h.segment_count() == 1);
    CHECK(h.slope(0) == Rational(1, 3));
    // collinear interior point is dropped; infinite points ignored
    auto p = pts({{0, 0}, {1, 1}, {2, 2}});
    p.emplace_back(5, Valuation::infinity());
    h = lower_hull(p);
    CHECK(h.vertices.size() == 2);
    CHECK_THROWS(lower_hull(pts({{0, 0}})));
}

TEST_CASE("valuation profiles") {
    ValuationProfile a = profile({{0, 1}, {Rational(-1, 2), 2}});
    ValuationProfile b = profile({{Rational(-1, 2), 1}});
    CHECK(a.total() == 3);
    CHECK(a.max() == 0);
    CHECK(a.contains(b));
    a.subtract(b);
    CHECK(a == profile({{0, 1}, {Rational(-1, 2), 1}}));
    CHECK_THROWS(b.subtract(profile({{1, 1}})));
    a.merge(b);
    CHECK(a.entries().begin()->first == 0);
}

TEST_CASE("root valuations from Newton polygons") {
    auto F = FqField::make(2, 1);
    const Place inf = Place::infinite(F);
    auto phi = DrinfeldModule::from_strings(F, {"t", "t", "1"});
    CHECK(root_valuations(phi.phi_t(), inf, std::nullopt) == profile({{0, 1}, {Rational(-1, 2), 2}}));
    phi = DrinfeldModule::from_strings(F, {"t", "1", "1"});
    CHECK(root_valuations(phi.phi_t(), inf, std::nullopt) == profile({{Rational(-1, 3), 3}}));
    // Carlitz: lambda^{q-1} = -t
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto G = FqField::make_default(q);
        auto carlitz = DrinfeldModule::from_strings(G, {"t", "1"});
        CHECK(root_valuations(carlitz.phi_t(), Place::infinite(G), std::nullopt) ==
              profile({{Rational(-1, static_cast<long>(q - 1)), q - 1}}));
    }
    // Carlitz phi_{t+1} at (t): both nonzero roots are units
    auto carlitz = DrinfeldModule::from_strings(F, {"t", "1"});
    const TwistedPoly P = phi_of(carlitz, Poly::parse(F, "t+1"));
    CHECK(root_valuations(P, Place::parse(F, "t"), std::nullopt) == profile({{0, 1}}));
}

TEST_CASE("shifted polygons") {
    // X^4 + X - c with w(c) = -3 at infinity: single slope from (0,-3) to (4,0)
    const auto poly = newton_polygon_from_valuations({Valuation::infinity(), Valuation(0), Valuation(0)}, 2,
                                                     Valuation(-3));
    REQUIRE(poly.segment_count() == 1);
    CHECK(poly.slope(0) == Rational(3, 4));
    CHECK(profile_from_polygon(poly) == profile({{Rational(-3, 4), 4}}));
    // w(c) = 5: points (0,5), (2,0), (4,0): two roots of valuation 5/2, two of valuation 0
    const auto poly2 =
        newton_polygon_from_valuations({Valuation::infinity(), Valuation(0), Valuation(0)}, 2, Valuation(5));
    CHECK(profile_from_polygon(poly2) == profile({{Rational(5, 2), 2}, {0, 2}}));
}
