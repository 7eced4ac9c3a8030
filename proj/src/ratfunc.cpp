#include "smb/ratfunc.hpp"

#include "smb/errors.hpp"

namespace smb {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ValidationError("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    const auto lead = den_.lead();
    if (lead != 1) {
        const auto inv = num_.F().inv(lead);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    RatFunc neg(-o.num_, o.den_);
    return *this += neg;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel so the product is already reduced.
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = (num_ / g1) * (o.num_ / g2);
    Poly d = (den_ / g2) * (o.den_ / g1);
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = Poly::constant(num_.field(), 1);
    const auto lead = den_.lead();
    if (lead != 1) {
        const auto inv = num_.F().inv(lead);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_q(t)");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RatFunc RatFunc::frobenius(unsigned i) const {
    RatFunc r;
    r.num_ = num_.frobenius(i);
    r.den_ = den_.frobenius(i);
    return r;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    auto wrap = [](const Poly& p) {
        const std::string s = p.to_string();
        return p.nnz() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

RatFunc RatFunc::parse(const FieldPtr& F, std::string_view s) {
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == '/' && depth == 0) {
            if (slash != std::string_view::npos) throw ValidationError("malformed rational function '" + std::string(s) + "'");
            slash = i;
        }
    }
    if (depth != 0) throw ValidationError("unbalanced parentheses in '" + std::string(s) + "'");
    if (slash == std::string_view::npos) return RatFunc(Poly::parse(F, s));
    Poly num = Poly::parse(F, s.substr(0, slash));
    Poly den = Poly::parse(F, s.substr(slash + 1));
    if (den.is_zero()) throw ValidationError("zero denominator in '" + std::string(s) + "'");
    return RatFunc(std::move(num), std::move(den));
}

} // namespace smb
