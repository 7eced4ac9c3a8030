#ifndef SMB_CLOSED_FORM_HPP
#define SMB_CLOSED_FORM_HPP

#include "smb/lattice.hpp"
#include "smb/place.hpp"

#include <optional>
#include <string>

namespace smb {

struct ClosedForm {
    std::string branch;          // "case1", "case2", "finite_bad", "finite_good"
    std::optional<int> m;
    Valuation w_j;
    std::optional<SMBProfile> division; // absent when no closed form exists for this n
    SMBProfile lattice;          // omega valuations (finite place: omega^0 of the Tate part)
    bool dictionary_applies = true;     // n d >= m at the infinite place
};

// Rank 2. Infinite place: w0 = w(t) < 0, w1 = w(a_1), w2 = w(a_2).
// Finite place: stable bad reduction signature w1 = 0 < w2; w_u = w(u).
ClosedForm closed_form_rank2(const Rational& w0, const Valuation& w1, const Valuation& w2, unsigned q, int d, int n,
                             PlaceKind kind, const Rational& w_u = 0);

// Valuations of the level-k basis elements for u = t at the infinite place.
std::pair<Rational, Rational> xi_valuations(const Rational& w0, const Valuation& w1, const Valuation& w2, unsigned q,
                                            int k);

// phi_t = t + a_s tau^s + a_r tau^r at the infinite place.
ClosedForm closed_form_two_term(int r, int s, const Rational& w0, const Rational& ws, const Rational& wr, unsigned q,
                                int d, int n);

// The m with w0 q^{(m+1)s} c < wj <= w0 q^{ms} c, c = (q^{r-s}-1)/(q-1).
int interval_index(const Rational& wj, const Rational& w0, unsigned q, int s, const Rational& c);

} // namespace smb

#endif
