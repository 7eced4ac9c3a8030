#ifndef SMB_POLY_HPP
#define SMB_POLY_HPP

#include "smb/field.hpp"

#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smb {

// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

// Element of A = F_q[t], dense, low degree first, no trailing zeros.
class Poly {
public:
    using Elem = FqField::Elem;

    Poly() = default;
    explicit Poly(FieldPtr F) : F_(std::move(F)) {}
    Poly(FieldPtr F, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr F, Elem c);
    static Poly monomial(FieldPtr F, Elem c, std::size_t e);
    static Poly t(FieldPtr F) { return monomial(std::move(F), 1, 1); }
    static Poly parse(FieldPtr F, std::string_view s);

    const FieldPtr& field() const { return F_; }
    const FqField& F() const { return *F_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::size_t nnz() const;
    // Number of trailing zero coefficients (order at t).
    std::size_t low_order() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(Elem c) const;
    Poly shifted(std::size_t e) const;

    // a = quot * b + rem with deg rem < deg b.
    std::pair<Poly, Poly> divrem(const Poly& b) const;
    Poly operator/(const Poly& b) const { return divrem(b).first; }
    Poly operator%(const Poly& b) const { return divrem(b).second; }
    Poly monic() const;
    Poly pow(std::uint64_t e) const;
    // t -> t^{q^i}; equals the q^i-th power since constants are fixed.
    Poly frobenius(unsigned i) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }
    // Degree first, then coefficients from the leading term.
    bool operator<(const Poly& o) const;

    std::string to_string() const;

private:
    void trim();
    void require_same_field(const Poly& o) const;

    FieldPtr F_;
    std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);

// All monic polynomials of exact degree d, in increasing order.
std::vector<Poly> monic_polys_of_degree(const FieldPtr& F, unsigned d);
// Residues mod a polynomial of degree d: every polynomial of degree < d.
std::vector<Poly> all_polys_below_degree(const FieldPtr& F, unsigned d);

bool is_irreducible(const Poly& f);
// Factorisation of a nonzero polynomial into monic irreducibles by trial
// division, sorted; the unit factor is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

} // namespace smb

#endif
