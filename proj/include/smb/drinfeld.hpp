#ifndef SMB_DRINFELD_HPP
#define SMB_DRINFELD_HPP

#include "smb/place.hpp"
#include "smb/twisted.hpp"

#include <string>
#include <vector>

namespace smb {

// phi_t = t + a_1 tau + ... + a_r tau^r with a_r != 0.
class DrinfeldModule {
public:
    explicit DrinfeldModule(TwistedPoly phi_t);
    static DrinfeldModule from_strings(const FieldPtr& F, const std::vector<std::string>& coeffs);

    const FieldPtr& field() const { return phi_t_.field(); }
    unsigned q() const { return field()->q(); }
    int rank() const { return phi_t_.degree(); }
    const TwistedPoly& phi_t() const { return phi_t_; }
    // a_i for 1 <= i <= r (a_0 = t).
    const RatFunc& a(int i) const { return phi_t_.coeff(static_cast<std::size_t>(i)); }
    std::vector<std::string> coefficient_strings() const;
    // Indices i >= 1 with a_i != 0.
    std::vector<int> support() const;

private:
    TwistedPoly phi_t_;
};

// phi_a = sum alpha_i (phi_t)^i by Horner, multiplying by phi_t on the left.
TwistedPoly phi_of(const DrinfeldModule& phi, const Poly& a);

// a_1^{q+1} / a_2 for rank 2.
RatFunc j_invariant(const DrinfeldModule& phi);
// Valuation of j for rank 2; +inf when a_1 = 0.
Valuation j_valuation(const DrinfeldModule& phi, const Place& w);

struct ReductionProfile {
    int reduced_rank = 0;
    Rational twist_valuation;
    bool stable = false;          // twist_valuation is an integer
    bool integral_model = false;  // twist_valuation == 0
    std::vector<Valuation> coefficient_valuations; // w(a_0), ..., w(a_r)
    std::vector<Valuation> twisted_valuations;     // after the twist
};

ReductionProfile reduction_profile(const DrinfeldModule& phi, const Place& w);

// Replace a_i by b^{q^i - 1} a_i.
DrinfeldModule twist(const DrinfeldModule& phi, const RatFunc& b);

} // namespace smb

#endif
