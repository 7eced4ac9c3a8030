#include "doctest.h"

#include "smb/drinfeld.hpp"
#include "smb/errors.hpp"

#include <random>

using namespace smb;

namespace {

DrinfeldModule module(unsigned q, std::vector<std::string> c) { return DrinfeldModule::from_strings(FqField::make_default(q), c); }

Poly random_poly(const FieldPtr& F, std::mt19937& rng, int max_deg) {
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    std::vector<FqField::Elem> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = static_cast<FqField::Elem>(rng() % F->q());
    return Poly(F, c);
}

} // namespace

TEST_CASE("phi_t^2 for the Carlitz module") {
    const auto phi = module(2, {"t", "1"});
    const TwistedPoly P = phi_of(phi, Poly::parse(phi.field(), "t^2"));
    REQUIRE(P.degree() == 2);
    CHECK(P.coeff(0).to_string() == "t^2");
    CHECK(P.coeff(1).to_string() == "t^2+t");
    CHECK(P.coeff(2).to_string() == "1");
    // same via skew_mul
    CHECK(skew_mul(phi.phi_t(), phi.phi_t()) == P);
}

TEST_CASE("phi of simple elements") {
    const auto phi = module(2, {"t", "t", "1"});
    const auto& F = phi.field();
    CHECK(phi_of(phi, Poly::constant(F, 1)) == TwistedPoly::constant(RatFunc(Poly::constant(F, 1))));
    const TwistedPoly P = phi_of(phi, Poly::parse(F, "t+1"));
    REQUIRE(P.degree() == 2);
    CHECK(P.coeff(0).to_string() == "t+1");
    CHECK(P.coeff(1).to_string() == "t");
    CHECK(P.coeff(2).to_string() == "1");
}

TEST_CASE("phi is a ring homomorphism") {
    std::mt19937 rng(11);
    for (unsigned q : {2u, 3u, 4u}) {
        const auto phi = module(q, {"t", "t+1", "1/t"});
        const auto& F = phi.field();
        for (int it = 0; it < 15; ++it) {
            const Poly a = random_poly(F, rng, 3), b = random_poly(F, rng, 3);
            CHECK(phi_of(phi, a * b) == skew_mul(phi_of(phi, a), phi_of(phi, b)));
            CHECK(phi_of(phi, a + b) == phi_of(phi, a) + phi_of(phi, b));
        }
    }
}

TEST_CASE("module validation") {
    CHECK_THROWS_AS(module(2, {"t+1", "1"}), ValidationError);
    CHECK_THROWS_AS(module(2, {"t"}), ValidationError);
    CHECK_THROWS_AS(module(2, {"t", "1", "0"}), ValidationError);
    const auto phi = module(3, {"t", "0", "t^2", "1"});
    CHECK(phi.rank() == 3);
    CHECK(phi.support() == std::vector<int>{2, 3});
}

TEST_CASE("j-invariant") {
    CHECK(j_invariant(module(2, {"t", "t", "1"})).to_string() == "t^3");
    CHECK(j_invariant(module(2, {"t", "1", "t"})).to_string() == "1/t");
    const auto phi = module(2, {"t", "t", "1"});
    CHECK(j_valuation(phi, Place::infinite(phi.field())) == Valuation(-3));
    CHECK(j_valuation(phi, Place::parse(phi.field(), "t")) == Valuation(3));
    CHECK_THROWS_AS(j_invariant(module(2, {"t", "1"})), UnsupportedShape);
}

TEST_CASE("reduction profiles") {
    const auto bad = module(2, {"t", "1", "t"});
    const Place at_t = Place::parse(bad.field(), "t");
    auto r = reduction_profile(bad, at_t);
    CHECK(r.reduced_rank == 1);
    CHECK(r.stable);
    CHECK(r.twist_valuation == 0);

    r = reduction_profile(module(2, {"t", "1", "1"}), at_t);
    CHECK(r.reduced_rank == 2);
    CHECK(r.twist_valuation == 0);
    CHECK(r.integral_model);

    // a_1 = t, a_2 = t^4: conjugating by b with w(b) = 1 gives a unit at tau and t at tau^2
    r = reduction_profile(module(2, {"t", "t", "t^4"}), at_t);
    CHECK(r.reduced_rank == 1);
    CHECK(r.stable);
    CHECK_FALSE(r.integral_model);
    REQUIRE(r.twisted_valuations.size() == 3);
    CHECK(r.twisted_valuations[1] == Valuation(0));
    CHECK(r.twisted_valuations[2] == Valuation(1));

    // non-integral twist: w(a_2)/(q^2 - 1) = 1/3 is the minimum
    r = reduction_profile(module(2, {"t", "t", "t"}), at_t);
    CHECK(r.reduced_rank == 2);
    CHECK(r.twist_valuation == Rational(1, 3));
    CHECK_FALSE(r.stable);
}

TEST_CASE("reduced rank one exactly when w(j) < 0") {
    std::mt19937 rng(5);
    for (unsigned q : {2u, 3u}) {
        auto F = FqField::make_default(q);
        const Place at_t = Place::parse(F, "t");
        for (int it = 0; it < 60; ++it) {
            Poly a1 = random_poly(F, rng, 3), a2 = random_poly(F, rng, 3);
            if (a1.is_zero() || a2.is_zero()) continue;
            const DrinfeldModule phi(TwistedPoly(F, {RatFunc(Poly::t(F)), RatFunc(a1), RatFunc(a2)}));
            const bool bad = j_valuation(phi, at_t) < Valuation(0);
            CHECK((reduction_profile(phi, at_t).reduced_rank == 1) == bad);
        }
    }
}

TEST_CASE("twist scales coefficients") {
    const auto phi = module(2, {"t", "t", "t^4"});
    const auto psi = twist(phi, RatFunc::parse(phi.field(), "1/t"));
    CHECK(psi.a(1).to_string() == "1");
    CHECK(psi.a(2).to_string() == "t");
}
