#include "smb/drinfeld.hpp"

#include "smb/errors.hpp"

#include <optional>

namespace smb {

DrinfeldModule::DrinfeldModule(TwistedPoly phi_t) : phi_t_(std::move(phi_t)) {
    if (phi_t_.is_zero()) throw ValidationError("phi_t is zero");
    const RatFunc t(Poly::t(phi_t_.field()));
    if (phi_t_.coeff(0) != t) throw ValidationError("constant coefficient of phi_t must be t");
    if (phi_t_.degree() < 1) throw ValidationError("rank must be at least 1");
}

DrinfeldModule DrinfeldModule::from_strings(const FieldPtr& F, const std::vector<std::string>& coeffs) {
    std::vector<RatFunc> c;
    for (auto& s : coeffs) c.push_back(RatFunc::parse(F, s));
    if (!c.empty() && c.back().is_zero()) throw ValidationError("leading coefficient a_r must be nonzero");
    return DrinfeldModule(TwistedPoly(F, std::move(c)));
}

std::vector<std::string> DrinfeldModule::coefficient_strings() const {
    std::vector<std::string> out;
    for (auto& c : phi_t_.coeffs()) out.push_back(c.to_string());
    return out;
}

std::vector<int> DrinfeldModule::support() const {
    std::vector<int> out;
    for (int i = 1; i <= rank(); ++i)
        if (!a(i).is_zero()) out.push_back(i);
    return out;
}

namespace {

TwistedPoly left_mul_phi_t(const DrinfeldModule& phi, const TwistedPoly& P) {
    const FieldPtr& F = phi.field();
    const int r = phi.rank();
    std::vector<RatFunc> out(P.coeffs().size() + r, RatFunc(Poly(F)));
    for (std::size_t k = 0; k < P.coeffs().size(); ++k) {
        const RatFunc& pk = P.coeffs()[k];
        if (pk.is_zero()) continue;
        for (int i = 0; i <= r; ++i) {
            const RatFunc& ai = phi.phi_t().coeff(i);
            if (ai.is_zero()) continue;
            out[k + i] += ai * pk.frobenius(static_cast<unsigned>(i));
        }
    }
    return TwistedPoly(F, std::move(out));
}

} // namespace

TwistedPoly phi_of(const DrinfeldModule& phi, const Poly& a) {
    const FieldPtr& F = phi.field();
    if (a.is_zero()) return TwistedPoly(F, {});
    TwistedPoly acc(F, {});
    for (int i = a.degree(); i >= 0; --i) {
        if (!acc.is_zero()) acc = left_mul_phi_t(phi, acc);
        const auto c = a.coeff(static_cast<std::size_t>(i));
        if (c != 0) acc += TwistedPoly::constant(RatFunc(Poly::constant(F, c)));
    }
    return acc;
}

RatFunc j_invariant(const DrinfeldModule& phi) {
    if (phi.rank() != 2) throw UnsupportedShape("j-invariant is defined here for rank 2 only");
    return phi.a(1).pow(static_cast<long long>(phi.q()) + 1) / phi.a(2);
}

Valuation j_valuation(const DrinfeldModule& phi, const Place& w) {
    if (phi.rank() != 2) throw UnsupportedShape("j-invariant is defined here for rank 2 only");
    const Valuation w1 = w.valuation(phi.a(1));
    const Valuation w2 = w.valuation(phi.a(2));
    if (w1.is_infinite()) return Valuation::infinity();
    return Valuation(Rational(w1.value() * (phi.q() + 1) - w2.value()));
}

ReductionProfile reduction_profile(const DrinfeldModule& phi, const Place& w) {
    if (w.is_infinite()) throw ValidationError("reduction profile is defined at finite places only");
    ReductionProfile rp;
    const unsigned q = phi.q();
    for (int i = 0; i <= phi.rank(); ++i) rp.coefficient_valuations.push_back(w.valuation(phi.phi_t().coeff(i)));
    // r' is the largest index minimising w(a_i)/(q^i - 1).
    std::optional<Rational> best;
    for (int i = 1; i <= phi.rank(); ++i) {
        const Valuation& v = rp.coefficient_valuations[i];
        if (v.is_infinite()) continue;
        const Rational ratio = v.value() / Rational(ipow(q, i) - 1);
        if (!best || ratio <= *best) {
            best = ratio;
            rp.reduced_rank = i;
        }
    }
    rp.twist_valuation = *best;
    rp.stable = is_integer(rp.twist_valuation);
    rp.integral_model = rp.twist_valuation == 0;
    for (int i = 0; i <= phi.rank(); ++i) {
        const Valuation& v = rp.coefficient_valuations[i];
        rp.twisted_valuations.push_back(v.is_infinite() ? v
                                                        : Valuation(Rational(v.value() - Rational(ipow(q, i) - 1) *
                                                                                              rp.twist_valuation)));
    }
    return rp;
}

DrinfeldModule twist(const DrinfeldModule& phi, const RatFunc& b) {
    std::vector<RatFunc> c = phi.phi_t().coeffs();
    for (int i = 1; i <= phi.rank(); ++i) {
        const Integer e = ipow(phi.q(), i) - 1;
        c[i] = c[i] * b.pow(e.get_si());
    }
    return DrinfeldModule(TwistedPoly(phi.field(), std::move(c)));
}

} // namespace smb
