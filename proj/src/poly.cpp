#include "smb/poly.hpp"

#include "smb/errors.hpp"
#include "smb/kernels.hpp"

#include <algorithm>
#include <cctype>

namespace smb {

Poly::Poly(FieldPtr F, std::vector<Elem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    for (Elem c : c_)
        if (c >= F_->q()) throw ValidationError("coefficient out of range for F_q");
    trim();
}

Poly Poly::constant(FieldPtr F, Elem c) {
    return Poly(std::move(F), std::vector<Elem>{c});
}

Poly Poly::monomial(FieldPtr F, Elem c, std::size_t e) {
    std::vector<Elem> v(e + 1, 0);
    v[e] = c;
    return Poly(std::move(F), std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
    if (F_ != o.F_ && !(F_ && o.F_ && *F_ == *o.F_)) throw ValidationError("polynomials over different fields");
}

std::size_t Poly::nnz() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem c) { return c != 0; }));
}

std::size_t Poly::low_order() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    return i;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    kernels::add_assign(*F_, c_.data(), o.c_.data(), o.c_.size());
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    kernels::axpy(*F_, c_.data(), o.c_.data(), o.c_.size(), F_->neg(1));
    trim();
    return *this;
}

Poly Poly::operator-() const {
    return scaled(F_->neg(1));
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.F_);
    // Outer loop over the sparser operand, row kernel over the other.
    const bool a_outer = a.nnz() <= b.nnz();
    const Poly& outer = a_outer ? a : b;
    const Poly& inner = a_outer ? b : a;
    std::vector<FqField::Elem> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < outer.c_.size(); ++i) {
        const auto c = outer.c_[i];
        if (c != 0) kernels::axpy(*a.F_, out.data() + i, inner.c_.data(), inner.c_.size(), c);
    }
    Poly r(a.F_);
    r.c_ = std::move(out);
    r.trim();
    return r;
}

Poly Poly::scaled(Elem c) const {
    Poly r(F_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    const Elem* row = F_->mul_row(c);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = row[c_[i]];
    return r;
}

Poly Poly::shifted(std::size_t e) const {
    Poly r(F_);
    if (is_zero()) return r;
    r.c_.assign(e, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& b) const {
    require_same_field(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    Poly quot(F_);
    if (rem.c_.size() < b.c_.size()) return {quot, rem};
    const std::size_t db = b.c_.size() - 1;
    quot.c_.assign(rem.c_.size() - db, 0);
    const Elem inv_lead = F_->inv(b.lead());
    for (std::size_t top = rem.c_.size(); top-- > db;) {
        const Elem c = rem.c_[top];
        if (c == 0) continue;
        const Elem f = F_->mul(c, inv_lead);
        quot.c_[top - db] = f;
        kernels::axpy(*F_, rem.c_.data() + (top - db), b.c_.data(), db + 1, F_->neg(f));
    }
    rem.trim();
    quot.trim();
    return {quot, rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(F_->inv(lead()));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = constant(F_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::frobenius(unsigned i) const {
    if (i == 0 || c_.size() <= 1) return *this;
    std::size_t step = 1;
    for (unsigned j = 0; j < i; ++j) step *= F_->q();
    Poly r(F_);
    r.c_.assign((c_.size() - 1) * step + 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k * step] = c_[k];
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Elem c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        const std::string mono = i == 1 ? "t" : "t^" + std::to_string(i);
        if (i == 0)
            out += F_->to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += F_->to_string(c) + "*" + mono;
    }
    return out;
}

Poly Poly::parse(FieldPtr F, std::string_view s) {
    std::string str;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) str.push_back(ch);
    if (str.size() >= 2 && str.front() == '(' && str.back() == ')') str = str.substr(1, str.size() - 2);
    if (str.empty()) throw ValidationError("empty polynomial");
    auto fail = [&]() { throw ValidationError("malformed polynomial '" + std::string(s) + "'"); };
    std::vector<Elem> acc;
    std::size_t i = 0;
    while (i < str.size()) {
        bool negate = false;
        if (str[i] == '+' || str[i] == '-') {
            negate = str[i] == '-';
            ++i;
        }
        // Coefficient: integer, or g / g^j.
        std::size_t j = i;
        Elem coef = 1;
        bool have_coef = false;
        if (j < str.size() && std::isdigit(static_cast<unsigned char>(str[j]))) {
            while (j < str.size() && std::isdigit(static_cast<unsigned char>(str[j]))) ++j;
            coef = F->parse(str.substr(i, j - i));
            have_coef = true;
        } else if (j < str.size() && str[j] == 'g') {
            ++j;
            if (j < str.size() && str[j] == '^') {
                ++j;
                const std::size_t k = j;
                while (j < str.size() && std::isdigit(static_cast<unsigned char>(str[j]))) ++j;
                if (j == k) fail();
            }
            coef = F->parse(str.substr(i, j - i));
            have_coef = true;
        }
        i = j;
        if (have_coef && i < str.size() && str[i] == '*') {
            ++i;
            if (i >= str.size() || str[i] != 't') fail();
        }
        std::size_t e = 0;
        if (i < str.size() && str[i] == 't') {
            ++i;
            e = 1;
            if (i < str.size() && str[i] == '^') {
                ++i;
                const std::size_t k = i;
                while (i < str.size() && std::isdigit(static_cast<unsigned char>(str[i]))) ++i;
                if (i == k) fail();
                e = std::stoul(str.substr(k, i - k));
            }
        } else if (!have_coef) {
            fail();
        }
        if (i < str.size() && str[i] != '+' && str[i] != '-') fail();
        if (negate) coef = F->neg(coef);
        if (acc.size() <= e) acc.resize(e + 1, 0);
        acc[e] = F->add(acc[e], coef);
    }
    return Poly(std::move(F), std::move(acc));
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Poly> all_polys_below_degree(const FieldPtr& F, unsigned d) {
    std::size_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= F->q();
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<FqField::Elem> c(d, 0);
        std::size_t v = idx;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = static_cast<FqField::Elem>(v % F->q());
            v /= F->q();
        }
        out.emplace_back(F, std::move(c));
    }
    return out;
}

std::vector<Poly> monic_polys_of_degree(const FieldPtr& F, unsigned d) {
    std::vector<Poly> out;
    const Poly lead = Poly::monomial(F, 1, d);
    for (auto& low : all_polys_below_degree(F, d)) out.push_back(lead + low);
    return out;
}

bool is_irreducible(const Poly& f) {
    const int deg = f.degree();
    if (deg < 1) return false;
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(deg); ++d)
        for (auto& cand : monic_polys_of_degree(f.field(), d))
            if ((f % cand).is_zero()) return false;
    return true;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factorisation of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f.monic();
    for (unsigned d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
        for (auto& cand : monic_polys_of_degree(f.field(), d)) {
            int mult = 0;
            while (true) {
                auto [q, r] = rest.divrem(cand);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
            if (rest.degree() < static_cast<int>(2 * d)) break;
        }
    }
    if (rest.degree() >= 1) {
        bool merged = false;
        for (auto& [p, m] : out)
            if (p == rest) {
                ++m;
                merged = true;
            }
        if (!merged) out.emplace_back(rest, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace smb
