#ifndef SMB_RATFUNC_HPP
#define SMB_RATFUNC_HPP

#include "smb/poly.hpp"

#include <string>
#include <string_view>

namespace smb {

// Element of F = F_q(t): num/den with gcd 1 and den monic.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);

    static RatFunc parse(const FieldPtr& F, std::string_view s);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
    RatFunc inverse() const;
    RatFunc pow(long long e) const;
    // c^{q^i}
    RatFunc frobenius(unsigned i) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();

    Poly num_, den_;
};

} // namespace smb

#endif
