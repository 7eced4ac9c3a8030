#ifndef SMB_PLACE_HPP
#define SMB_PLACE_HPP

#include "smb/rational.hpp"
#include "smb/ratfunc.hpp"

#include <compare>
#include <optional>
#include <string>

namespace smb {

// Rational valuation or +infinity.
class Valuation {
public:
    Valuation() = default; // +inf
    Valuation(Rational v) : v_(std::move(v)) {}
    Valuation(long v) : v_(Rational(v)) {}
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return !v_.has_value(); }
    const Rational& value() const;

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend bool operator==(const Valuation& a, const Valuation& b);
    friend bool operator<(const Valuation& a, const Valuation& b);
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    std::string to_string() const;
    static Valuation parse(std::string_view s);

private:
    std::optional<Rational> v_;
};

enum class PlaceKind { Infinite, Finite };

// Place of F_q(t): the infinite place (w(t) = -1) or a monic irreducible.
class Place {
public:
    static Place infinite(FieldPtr F);
    static Place finite(const Poly& pi);
    static Place parse(const FieldPtr& F, std::string_view s);

    PlaceKind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == PlaceKind::Infinite; }
    const Poly& uniformizer() const { return pi_; }
    const FieldPtr& field() const { return F_; }
    int degree() const { return is_infinite() ? 1 : pi_.degree(); }

    Valuation valuation(const RatFunc& x) const;
    Valuation valuation(const Poly& x) const;
    // w(t): -1 at infinity, 1 at (t), 0 elsewhere.
    Rational w_t() const;
    bool divides(const Poly& a) const;

    std::string to_string() const;
    bool operator==(const Place& o) const { return kind_ == o.kind_ && pi_ == o.pi_; }
    // Infinite first, then finite places by degree and coefficients.
    bool operator<(const Place& o) const;

private:
    Place() = default;
    long ord(const Poly& x) const;

    PlaceKind kind_ = PlaceKind::Infinite;
    FieldPtr F_;
    Poly pi_;
};

} // namespace smb

#endif
