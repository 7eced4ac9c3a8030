#ifndef SMB_LATTICE_HPP
#define SMB_LATTICE_HPP

#include "smb/newton.hpp"
#include "smb/place.hpp"

#include <vector>

namespace smb {

// Valuations of a successive minimum basis, non-increasing.
using SMBProfile = std::vector<Rational>;

// Valuation-level model of the period lattice.
// Infinite place: Lambda = sum A omega_i, w(a omega_i) = w(omega_i) + w0 deg a.
// Finite place: Tate lattice of the good-reduction part psi of rank
// reduced_rank, w(b ._psi omega_i) = q^{reduced_rank deg b} w(omega_i).
struct LatticeModel {
    PlaceKind kind = PlaceKind::Infinite;
    int reduced_rank = 0;
    std::vector<Rational> generators;
    unsigned q = 2;
    Rational w0 = -1;
};

void validate(const LatticeModel& L);

// Nonzero lattice elements with valuation strictly above threshold.
ValuationProfile lattice_values_above(const LatticeModel& L, const Rational& threshold);

// v + sum over nonzero mu with w(mu) > v of (v - w(mu)).
Rational exp_valuation(const LatticeModel& L, const Rational& v);

// Infinite place: w(lambda_i) = exp_valuation(w(omega_i) - w(u^n)).
SMBProfile lattice_to_division(const LatticeModel& L, int d, int n);
// Finite place (stable model, w not dividing u): the first reduced_rank
// entries are the good-reduction part, the rest come from the roots of
// psi_{u^n}(X) - omega^0_i.
SMBProfile lattice_to_division_finite(const LatticeModel& L, const SMBProfile& good_part, int d, int n);

// Largeness: n d (-w0) >= w(lambda_1) - w(lambda_r).
bool largeness_holds_infinite(const SMBProfile& division, int d, int n, const Rational& w0 = -1);
LatticeModel division_to_lattice(const SMBProfile& division, unsigned q, int d, int n, const Rational& w0 = -1);

struct FiniteLatticeData {
    SMBProfile good_part;
    LatticeModel lattice;
};
FiniteLatticeData division_to_lattice_finite(const SMBProfile& division, int reduced_rank, unsigned q, int d, int n);

} // namespace smb

#endif
