#ifndef SMB_ENGINE_HPP
#define SMB_ENGINE_HPP

#include "smb/closed_form.hpp"
#include "smb/drinfeld.hpp"
#include "smb/lattice.hpp"
#include "smb/newton.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace smb {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 16;

struct RecursionLevel {
    int level = 0;
    SMBProfile valuations;
    // Newton polygon used for each basis element at this level.
    std::vector<NewtonPolygon> polygons;
};

struct RecursionTrace {
    ValuationProfile level_one_profile; // all nonzero roots of phi_u
    std::vector<RecursionLevel> levels;
    const SMBProfile& at(int n) const { return levels.at(static_cast<std::size_t>(n - 1)).valuations; }
};

struct RecursionOptions {
    std::uint64_t budget = kDefaultBudget;
    // Only for rank-1 good-reduction representatives.
    bool allow_place_dividing_u = false;
};

// Rank <= 2, or phi_t = t + a_s tau^s + a_r tau^r.
void check_engine_shape(const DrinfeldModule& phi);
void check_engine_inputs(const DrinfeldModule& phi, const Place& w, const Poly& u, int n, bool allow_place_dividing_u);

RecursionTrace smb_recursion(const DrinfeldModule& phi, const Place& w, const Poly& u, int n,
                             const RecursionOptions& opts = {});
// Same, continuing until the infinite-place largeness condition holds at
// some level >= n.
RecursionTrace smb_recursion_until_large(const DrinfeldModule& phi, const Place& w, const Poly& u, int n,
                                         int& large_level, const RecursionOptions& opts = {});

// Valuation of phi_a(x) by a unique minimal term; throws AmbiguousCancellation on ties.
Rational termwise_valuation(const std::vector<Valuation>& coeff_vals, unsigned q, const Rational& v);

// rules[i][k] = w(a lambda_i) for deg a = k, 0 <= k < n d.
using DegreeRules = std::vector<std::vector<Rational>>;

ValuationProfile predict_division_multiset(const SMBProfile& profile, const DegreeRules& rules, unsigned q, int d,
                                           int n);
ValuationProfile oracle_division_multiset(const DrinfeldModule& phi, const Poly& u, int n, const Place& w,
                                          std::uint64_t budget = kDefaultBudget);

DegreeRules degree_rules_infinite(const LatticeModel& L, int d, int n);
DegreeRules degree_rules_finite(const SMBProfile& good_part, const LatticeModel& L, int d, int n,
                                const Rational& shift);
// w(a lambda_i) = w(xi_{i, nd - deg a}), infinite place, rank 2.
DegreeRules degree_rules_closed_form(const Rational& w0, const Valuation& w1, const Valuation& w2, unsigned q, int d,
                                     int n);

// Closed form adapted to phi at w (twist handled at finite places).
std::optional<ClosedForm> closed_form_for_module(const DrinfeldModule& phi, const Place& w, const Poly& u, int n);

// Division valuations of a good-reduction representative psi_t = t + tau^{r'}.
SMBProfile good_part_valuations(const FieldPtr& F, const Place& w, const Poly& u, int n, int reduced_rank);

struct Prediction {
    SMBProfile profile;
    LatticeModel lattice;
    int lattice_level = 0;
    DegreeRules rules;
    ValuationProfile multiset;
};
Prediction predict_for_module(const DrinfeldModule& phi, const Place& w, const Poly& u, int n,
                              std::uint64_t budget = kDefaultBudget);

struct SMBAnalysis {
    RecursionTrace trace;
    SMBProfile recursion;
    std::optional<ClosedForm> closed_form;
    std::optional<SMBProfile> dictionary;
    std::optional<LatticeModel> dictionary_lattice;
    std::optional<ReductionProfile> reduction;
    bool agree = true;
};
SMBAnalysis analyze_smb(const DrinfeldModule& phi, const Place& w, const Poly& u, int n,
                        std::uint64_t budget = kDefaultBudget);

} // namespace smb

#endif
