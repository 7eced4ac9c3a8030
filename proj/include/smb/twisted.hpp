#ifndef SMB_TWISTED_HPP
#define SMB_TWISTED_HPP

#include "smb/ratfunc.hpp"

#include <string>
#include <vector>

namespace smb {

// sum_i c_i tau^i over F_q(t), acting as the additive polynomial
// sum_i c_i X^{q^i}.
class TwistedPoly {
public:
    TwistedPoly() = default;
    TwistedPoly(FieldPtr F, std::vector<RatFunc> coeffs);

    static TwistedPoly constant(const RatFunc& c);

    const FieldPtr& field() const { return F_; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    const RatFunc& coeff(std::size_t i) const { return c_.at(i); }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    TwistedPoly& operator+=(const TwistedPoly& o);
    friend TwistedPoly operator+(TwistedPoly a, const TwistedPoly& b) { return a += b; }
    bool operator==(const TwistedPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TwistedPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void trim();

    FieldPtr F_;
    std::vector<RatFunc> c_;
};

// (f g)_k = sum_{i+j=k} f_i g_j^{q^i}
TwistedPoly skew_mul(const TwistedPoly& f, const TwistedPoly& g);

} // namespace smb

#endif
