#include "smb/place.hpp"

#include "smb/errors.hpp"

namespace smb {

const Rational& Valuation::value() const {
    if (!v_) throw std::domain_error("value of an infinite valuation");
    return *v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(Rational(*a.v_ + *b.v_));
}

bool operator==(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.v_ == *b.v_;
}

bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.v_ < *b.v_;
}

std::string Valuation::to_string() const {
    return v_ ? smb::to_string(*v_) : "+inf";
}

Valuation Valuation::parse(std::string_view s) {
    if (s == "+inf" || s == "inf") return infinity();
    return Valuation(parse_rational(s));
}

Place Place::infinite(FieldPtr F) {
    Place p;
    p.kind_ = PlaceKind::Infinite;
    p.F_ = F;
    p.pi_ = Poly(F);
    return p;
}

Place Place::finite(const Poly& pi) {
    if (!pi.is_monic()) throw ValidationError("place " + pi.to_string() + " is not monic");
    if (!is_irreducible(pi)) throw ValidationError("place " + pi.to_string() + " is not irreducible");
    Place p;
    p.kind_ = PlaceKind::Finite;
    p.F_ = pi.field();
    p.pi_ = pi;
    return p;
}

Place Place::parse(const FieldPtr& F, std::string_view s) {
    if (s == "infinite" || s == "inf" || s == "infinity") return infinite(F);
    return finite(Poly::parse(F, s));
}

long Place::ord(const Poly& x) const {
    if (pi_.degree() == 1 && pi_.coeff(0) == 0) return static_cast<long>(x.low_order());
    long n = 0;
    Poly cur = x;
    while (true) {
        auto [q, r] = cur.divrem(pi_);
        if (!r.is_zero()) return n;
        cur = std::move(q);
        ++n;
    }
}

Valuation Place::valuation(const Poly& x) const {
    if (x.is_zero()) return Valuation::infinity();
    if (is_infinite()) return Valuation(-static_cast<long>(x.degree()));
    return Valuation(ord(x));
}

Valuation Place::valuation(const RatFunc& x) const {
    if (x.is_zero()) return Valuation::infinity();
    if (is_infinite()) return Valuation(static_cast<long>(x.den().degree()) - x.num().degree());
    return Valuation(ord(x.num()) - ord(x.den()));
}

Rational Place::w_t() const {
    return valuation(Poly::t(F_)).value();
}

bool Place::divides(const Poly& a) const {
    if (is_infinite()) return false;
    return (a % pi_).is_zero();
}

std::string Place::to_string() const {
    return is_infinite() ? "infinite" : pi_.to_string();
}

bool Place::operator<(const Place& o) const {
    if (is_infinite() != o.is_infinite()) return is_infinite();
    if (is_infinite()) return false;
    return pi_ < o.pi_;
}

} // namespace smb
