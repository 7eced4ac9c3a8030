#include "smb/conductor.hpp"

#include "smb/errors.hpp"
#include "smb/ramification.hpp"

#include <algorithm>

namespace smb {

std::string to_string(ConductorCase c) {
    switch (c) {
    case ConductorCase::C1Wild: return "C1_wild";
    case ConductorCase::C2Tame: return "C2_tame";
    case ConductorCase::HypothesisFailed: return "hypothesis_failed";
    }
    return "";
}

ConductorReport local_conductor(unsigned q, const Valuation& w_j, PlaceKind kind, const Rational& w0) {
    ConductorReport out;
    out.w_j = w_j;
    const Rational qq = q;
    const unsigned p = characteristic_of(q);
    const Rational tame_floor = kind == PlaceKind::Infinite ? Rational(w0 * qq) : Rational(0);
    if (w_j.is_infinite() || w_j.value() >= tame_floor) {
        out.conductor_case = ConductorCase::C2Tame;
        out.exponent = Rational(0);
        return out;
    }
    const Rational& wj = w_j.value();
    if (!is_integer(wj) || divides(p, wj)) {
        out.conductor_case = ConductorCase::HypothesisFailed;
        out.reason = "p divides w(j)";
        return out;
    }
    out.conductor_case = ConductorCase::C1Wild;
    PiecewiseLinear psi;
    if (kind == PlaceKind::Infinite) {
        out.exponent = (-wj + w0 * qq) / (qq - 1);
        psi = psi_infinite_wild(q, wj, w0, Rational(1));
    } else {
        out.exponent = -wj / (qq - 1);
        psi = psi_finite_bad(q, 1, 1, Rational(1), *out.exponent);
    }
    const Rational from_breaks = conductor_from_breaks(rank_steps_from_filtration(filtration_from_psi(psi), 2, 1), 2);
    if (from_breaks != *out.exponent) throw std::logic_error("conductor closed form disagrees with the break integral");
    return out;
}

ConductorReport conductor_local(const DrinfeldModule& phi, const Place& w) {
    if (phi.rank() != 2) throw UnsupportedShape("conductor is implemented for rank 2 only");
    ConductorReport out = local_conductor(phi.q(), j_valuation(phi, w), w.kind(), w.w_t());
    out.place = w.to_string();
    out.degree = w.degree();
    return out;
}

namespace {

RatFunc nonzero_j(const DrinfeldModule& phi) {
    RatFunc j = j_invariant(phi);
    if (j.is_zero()) throw HypothesisError("j = 0 out of scope");
    return j;
}

} // namespace

Rational j_height(const DrinfeldModule& phi) {
    const RatFunc j = nonzero_j(phi);
    const Place inf = Place::infinite(phi.field());
    Rational h = std::max(Rational(-inf.valuation(j).value()), Rational(0));
    if (j.den().degree() > 0)
        for (auto& [pi, mult] : factor(j.den())) h += Rational(pi.degree() * mult);
    return h;
}

std::vector<Place> j_support(const DrinfeldModule& phi) {
    const RatFunc j = nonzero_j(phi);
    std::vector<Place> out{Place::infinite(phi.field())};
    std::vector<Poly> primes;
    for (const Poly* part : {&j.num(), &j.den()})
        if (part->degree() > 0)
            for (auto& [pi, mult] : factor(*part)) primes.push_back(pi);
    std::sort(primes.begin(), primes.end());
    for (auto& pi : primes) out.push_back(Place::finite(pi));
    return out;
}

GlobalConductor global_conductor(const DrinfeldModule& phi) {
    GlobalConductor out;
    out.total = 0;
    for (auto& w : j_support(phi)) {
        ConductorReport rep = conductor_local(phi, w);
        if (rep.exponent)
            out.total += Rational(rep.degree) * *rep.exponent;
        else
            out.complete = false;
        out.places.push_back(std::move(rep));
    }
    return out;
}

SzpiroReport szpiro_report(const DrinfeldModule& phi) {
    SzpiroReport out;
    out.h_j = j_height(phi);
    out.conductor = global_conductor(phi);
    if (out.conductor.complete) {
        const unsigned q = phi.q();
        out.bound = out.conductor.total * (q - 1) + q;
        out.holds = out.h_j <= *out.bound;
    }
    return out;
}

} // namespace smb
