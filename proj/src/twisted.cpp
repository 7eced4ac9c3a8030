#include "smb/twisted.hpp"

namespace smb {

TwistedPoly::TwistedPoly(FieldPtr F, std::vector<RatFunc> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    trim();
}

TwistedPoly TwistedPoly::constant(const RatFunc& c) {
    return TwistedPoly(c.field(), {c});
}

void TwistedPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly& TwistedPoly::operator+=(const TwistedPoly& o) {
    if (!F_) F_ = o.F_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunc(Poly(F_)));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

std::string TwistedPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string c = c_[i].to_string();
        const bool wrap = i > 0 && c_[i].is_polynomial() && c_[i].num().nnz() > 1;
        out += wrap ? "(" + c + ")" : c;
        if (i == 1) out += "*tau";
        if (i > 1) out += "*tau^" + std::to_string(i);
    }
    return out;
}

TwistedPoly skew_mul(const TwistedPoly& f, const TwistedPoly& g) {
    if (f.is_zero() || g.is_zero()) return TwistedPoly(f.field() ? f.field() : g.field(), {});
    const FieldPtr& F = f.field();
    std::vector<RatFunc> out(f.coeffs().size() + g.coeffs().size() - 1, RatFunc(Poly(F)));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const RatFunc& fi = f.coeffs()[i];
        if (fi.is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            const RatFunc& gj = g.coeffs()[j];
            if (gj.is_zero()) continue;
            out[i + j] += fi * gj.frobenius(static_cast<unsigned>(i));
        }
    }
    return TwistedPoly(F, std::move(out));
}

} // namespace smb
