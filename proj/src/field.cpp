#include "smb/field.hpp"

#include "smb/errors.hpp"
#include "smb/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace smb {

namespace {

using Digits = std::vector<unsigned>;

Digits trim(Digits d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

// Remainder of a by a monic b over F_p.
Digits poly_mod(Digits a, const Digits& b, unsigned p) {
    a = trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
        const unsigned c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        a = trim(a);
    }
    return a;
}

bool irreducible_over_prime(const Digits& m, unsigned p) {
    const std::size_t deg = m.size() - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            Digits cand(dd + 1, 0);
            std::size_t v = idx;
            for (std::size_t i = 0; i < dd; ++i) {
                cand[i] = v % p;
                v /= p;
            }
            cand[dd] = 1;
            if (poly_mod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

unsigned encode(const Digits& d, unsigned p) {
    unsigned v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

Digits decode(unsigned v, unsigned p, unsigned k) {
    Digits d(k, 0);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

} // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::vector<unsigned> FqField::default_modulus(unsigned p, unsigned k) {
    if (k == 1) return {0, 1};
    // Conway polynomials, low degree first.
    if (p == 2 && k == 2) return {1, 1, 1};
    if (p == 2 && k == 3) return {1, 1, 0, 1};
    if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
    if (p == 3 && k == 2) return {2, 2, 1};
    // Otherwise the first irreducible x^k + c_{k-1} x^{k-1} + ... + c_0, ordered by
    // the base-p number c_0 + c_1 p + ...
    std::vector<unsigned> m(k + 1, 0);
    m[k] = 1;
    for (;;) {
        std::size_t i = 0;
        while (i < k && ++m[i] == p) m[i++] = 0;
        if (i == k) break;
        if (irreducible_over_prime(m, p)) return m;
    }
    throw std::logic_error("no irreducible of degree k found");
}

std::shared_ptr<const FqField> FqField::make(unsigned p, unsigned k) {
    return make(p, k, default_modulus(p, k));
}

std::shared_ptr<const FqField> FqField::make_default(unsigned q) {
    const unsigned p = characteristic_of(q);
    unsigned k = 0;
    unsigned v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
    return make(p, k);
}

std::shared_ptr<const FqField> FqField::make(unsigned p, unsigned k, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw ValidationError("k must be at least 1");
    unsigned q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > 256) throw ValidationError("q = p^k must be at most 256");
    }
    for (auto& c : modulus) {
        if (c >= p) throw ValidationError("modulus coefficient out of range for p = " + std::to_string(p));
    }
    modulus = trim(modulus);
    if (modulus.size() != k + 1) throw ValidationError("modulus must have degree k = " + std::to_string(k));
    if (modulus.back() != 1) throw ValidationError("modulus must be monic");
    if (!irreducible_over_prime(modulus, p)) throw ValidationError("modulus is not irreducible over F_p");
    auto f = std::shared_ptr<FqField>(new FqField());
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;
    f->modulus_ = std::move(modulus);
    f->build();
    return f;
}

void FqField::build() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        const Digits da = decode(a, p_, k_);
        Digits dn(k_);
        for (unsigned i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(encode(dn, p_));
        for (unsigned b = 0; b < q_; ++b) {
            const Digits db = decode(b, p_, k_);
            Digits ds(k_);
            for (unsigned i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<Elem>(encode(ds, p_));
            Digits prod(2 * k_, 0);
            for (unsigned i = 0; i < k_; ++i)
                for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            const Digits r = k_ == 1 ? trim(Digits{prod[0]}) : poly_mod(prod, modulus_, p_);
            mul_[a * q_ + b] = static_cast<Elem>(encode(r, p_));
        }
    }
    auto order = [&](Elem g) {
        unsigned ord = 1;
        Elem x = g;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        return ord;
    };
    Elem gen = 0;
    const Elem root = static_cast<Elem>(k_ == 1 ? 0 : p_);
    if (k_ > 1 && order(root) == q_ - 1) {
        gen = root;
    } else {
        for (unsigned c = 1; c < q_; ++c) {
            if (order(static_cast<Elem>(c)) == q_ - 1) {
                gen = static_cast<Elem>(c);
                break;
            }
        }
    }
    if (q_ == 2) gen = 1;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    inv_.assign(q_, 0);
    Elem x = 1;
    for (unsigned j = 0; j < q_ - 1; ++j) {
        exp_[j] = x;
        log_[x] = j;
        x = mul(x, gen);
    }
    for (unsigned a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return inv_[a];
}

FqField::Elem FqField::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

unsigned FqField::log(Elem a) const {
    if (a == 0) throw std::domain_error("log of zero in F_q");
    return log_[a];
}

FqField::Elem FqField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::string FqField::to_string(Elem a) const {
    if (k_ == 1 || a == 0 || a == 1) return std::to_string(a);
    const unsigned j = log_[a];
    return j == 1 ? "g" : "g^" + std::to_string(j);
}

FqField::Elem FqField::parse(std::string_view s) const {
    std::string str;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) str.push_back(ch);
    if (str.empty()) throw ValidationError("empty field element");
    if (str[0] == 'g') {
        unsigned long long j = 1;
        if (str.size() > 1) {
            if (str[1] != '^' || str.size() < 3) throw ValidationError("malformed field element '" + str + "'");
            auto [ptr, ec] = std::from_chars(str.data() + 2, str.data() + str.size(), j);
            if (ec != std::errc() || ptr != str.data() + str.size())
                throw ValidationError("malformed field element '" + str + "'");
        }
        return exp(static_cast<unsigned>(j % (q_ - 1)));
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(str.data(), str.data() + str.size(), v);
    if (ec != std::errc() || ptr != str.data() + str.size())
        throw ValidationError("malformed field element '" + str + "'");
    return from_int(v);
}

std::vector<unsigned> FqField::parse_modulus(unsigned p, std::string_view s) {
    // Polynomial in x over F_p, e.g. "x^2+x+1".
    std::vector<unsigned> out;
    std::string str;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) str.push_back(ch);
    if (str.empty()) throw ValidationError("empty modulus");
    std::size_t i = 0;
    while (i < str.size()) {
        int sign = 1;
        if (str[i] == '+' || str[i] == '-') {
            sign = str[i] == '-' ? -1 : 1;
            ++i;
        }
        long long coef = 1;
        bool have_coef = false;
        std::size_t j = i;
        while (j < str.size() && std::isdigit(static_cast<unsigned char>(str[j]))) ++j;
        if (j > i) {
            coef = std::stoll(str.substr(i, j - i));
            have_coef = true;
            i = j;
            if (i < str.size() && str[i] == '*') ++i;
        }
        unsigned e = 0;
        if (i < str.size() && str[i] == 'x') {
            ++i;
            e = 1;
            if (i < str.size() && str[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < str.size() && std::isdigit(static_cast<unsigned char>(str[k]))) ++k;
                if (k == i) throw ValidationError("malformed modulus '" + str + "'");
                e = static_cast<unsigned>(std::stoul(str.substr(i, k - i)));
                i = k;
            }
        } else if (!have_coef) {
            throw ValidationError("malformed modulus '" + str + "'");
        }
        if (i < str.size() && str[i] != '+' && str[i] != '-') throw ValidationError("malformed modulus '" + str + "'");
        if (out.size() <= e) out.resize(e + 1, 0);
        long long v = (static_cast<long long>(out[e]) + sign * coef) % static_cast<long long>(p);
        if (v < 0) v += p;
        out[e] = static_cast<unsigned>(v);
    }
    return out;
}

std::string FqField::modulus_string() const {
    std::string out;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        const unsigned c = modulus_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (i == 0)
            out += std::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(c) + "*" + mono;
    }
    return out;
}

} // namespace smb
