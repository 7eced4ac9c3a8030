#include "smb/engine.hpp"

#include "smb/errors.hpp"

#include <functional>
#include <limits>

namespace smb {

namespace {

std::uint64_t checked_pow_u64(std::uint64_t q, std::uint64_t e) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / q) throw BudgetExceeded("enumeration size overflows");
        v *= q;
    }
    return v;
}

std::vector<Valuation> coefficient_valuations(const TwistedPoly& P, const Place& w) {
    std::vector<Valuation> out;
    for (auto& c : P.coeffs()) out.push_back(w.valuation(c));
    return out;
}

struct LevelOne {
    std::vector<Valuation> u_vals;
    NewtonPolygon polygon;
    ValuationProfile profile;
    SMBProfile basis;
};

LevelOne level_one(const DrinfeldModule& phi, const Place& w, const Poly& u, const RecursionOptions& opts) {
    const FieldPtr& F = phi.field();
    const unsigned q = phi.q();
    const int r = phi.rank();
    const int d = u.degree();
    LevelOne out;
    out.u_vals = coefficient_valuations(phi_of(phi, u), w);
    out.polygon = newton_polygon_from_valuations(out.u_vals, q, std::nullopt);
    out.profile = profile_from_polygon(out.polygon);

    // Nonzero residues mod u and the coefficient valuations of phi_a.
    std::vector<Poly> residues = all_polys_below_degree(F, static_cast<unsigned>(d));
    residues.erase(residues.begin());
    std::vector<std::vector<Valuation>> residue_vals;
    for (auto& a : residues) residue_vals.push_back(coefficient_valuations(phi_of(phi, a), w));

    // Nonzero points of the good-reduction part all share one valuation.
    int good_block = 0;
    if (!w.is_infinite() && !w.divides(u)) good_block = reduction_profile(phi, w).reduced_rank;

    const std::size_t R = residues.size() + 1;
    std::vector<std::vector<Rational>> action; // action[j][idx]: w(a_idx lambda_j)
    for (int i = 0; i < r; ++i) {
        if (i == 0) {
            out.basis.push_back(out.profile.max());
        } else {
            if (checked_pow_u64(q, static_cast<std::uint64_t>(d) * i) > opts.budget)
                throw BudgetExceeded("span enumeration exceeds the budget");
            ValuationProfile span;
            std::vector<std::size_t> digits(static_cast<std::size_t>(i), 0);
            while (true) {
                std::size_t pos = 0;
                while (pos < digits.size() && ++digits[pos] == R) digits[pos++] = 0;
                if (pos == digits.size()) break;
                std::optional<Rational> best;
                for (std::size_t j = 0; j < digits.size(); ++j) {
                    if (digits[j] == 0) continue;
                    const Rational& v = action[j][digits[j] - 1];
                    if (!best || v < *best) best = v;
                }
                span.add(*best);
            }
            ValuationProfile rest = out.profile;
            if (!rest.contains(span))
                throw HypothesisError("span of the earlier basis elements is not contained in the root multiset");
            rest.subtract(span);
            out.basis.push_back(rest.max());
        }
        if (i + 1 < r) {
            std::vector<Rational> row;
            for (std::size_t idx = 0; idx < residues.size(); ++idx) {
                if (i < good_block)
                    row.push_back(out.basis[i]);
                else
                    row.push_back(termwise_valuation(residue_vals[idx], q, out.basis[i]));
            }
            action.push_back(std::move(row));
        }
    }
    return out;
}

RecursionLevel next_level(const RecursionLevel& prev, const std::vector<Valuation>& u_vals, unsigned q) {
    RecursionLevel lvl;
    lvl.level = prev.level + 1;
    for (auto& v : prev.valuations) {
        NewtonPolygon poly = newton_polygon_from_valuations(u_vals, q, Valuation(v));
        // Largest root valuation: minus the leftmost slope.
        lvl.valuations.push_back(Rational(-poly.slope(0)));
        lvl.polygons.push_back(std::move(poly));
    }
    return lvl;
}

RecursionTrace start_trace(const DrinfeldModule& phi, const Place& w, const Poly& u, const RecursionOptions& opts,
                           std::vector<Valuation>& u_vals) {
    LevelOne one = level_one(phi, w, u, opts);
    RecursionTrace trace;
    trace.level_one_profile = one.profile;
    RecursionLevel lvl;
    lvl.level = 1;
    lvl.valuations = one.basis;
    lvl.polygons.assign(one.basis.size(), one.polygon);
    trace.levels.push_back(std::move(lvl));
    u_vals = std::move(one.u_vals);
    return trace;
}

} // namespace

void check_engine_shape(const DrinfeldModule& phi) {
    if (phi.rank() <= 2) return;
    const auto sup = phi.support();
    if (sup.size() != 2) throw UnsupportedShape("unsupported shape: rank > 2 needs phi_t = t + a_s tau^s + a_r tau^r");
}

void check_engine_inputs(const DrinfeldModule& phi, const Place& w, const Poly& u, int n, bool allow_place_dividing_u) {
    check_engine_shape(phi);
    if (n < 1) throw ValidationError("n must be at least 1");
    if (!u.is_monic() || !is_irreducible(u)) throw ValidationError("u must be monic irreducible");
    if (!allow_place_dividing_u && w.divides(u)) throw ValidationError("w divides u: min-rule unsupported");
}

Rational termwise_valuation(const std::vector<Valuation>& vals, unsigned q, const Rational& v) {
    std::optional<Rational> best;
    int ties = 0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (vals[k].is_infinite()) continue;
        Rational term = vals[k].value() + Rational(ipow(q, k)) * v;
        if (!best || term < *best) {
            best = std::move(term);
            ties = 1;
        } else if (term == *best) {
            ++ties;
        }
    }
    if (!best) throw ValidationError("term-wise valuation of the zero polynomial");
    if (ties > 1) throw AmbiguousCancellation("ambiguous cancellation: tied minimal terms");
    return *best;
}

RecursionTrace smb_recursion(const DrinfeldModule& phi, const Place& w, const Poly& u, int n,
                             const RecursionOptions& opts) {
    check_engine_inputs(phi, w, u, n, opts.allow_place_dividing_u);
    std::vector<Valuation> u_vals;
    RecursionTrace trace = start_trace(phi, w, u, opts, u_vals);
    while (static_cast<int>(trace.levels.size()) < n)
        trace.levels.push_back(next_level(trace.levels.back(), u_vals, phi.q()));
    return trace;
}

RecursionTrace smb_recursion_until_large(const DrinfeldModule& phi, const Place& w, const Poly& u, int n,
                                         int& large_level, const RecursionOptions& opts) {
    if (!w.is_infinite()) throw ValidationError("largeness search applies at the infinite place");
    check_engine_inputs(phi, w, u, n, false);
    const int d = u.degree();
    std::vector<Valuation> u_vals;
    RecursionTrace trace = start_trace(phi, w, u, opts, u_vals);
    constexpr int kMaxLevels = 512;
    while (true) {
        const int lvl = static_cast<int>(trace.levels.size());
        if (lvl >= n && largeness_holds_infinite(trace.levels.back().valuations, d, lvl, w.w_t())) {
            large_level = lvl;
            return trace;
        }
        if (lvl >= kMaxLevels) throw HypothesisError("largeness condition not reached");
        trace.levels.push_back(next_level(trace.levels.back(), u_vals, phi.q()));
    }
}

ValuationProfile predict_division_multiset(const SMBProfile& profile, const DegreeRules& rules, unsigned q, int d,
                                           int n) {
    const int nd = n * d;
    if (rules.size() != profile.size()) throw ValidationError("rule table must have one row per basis element");
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (static_cast<int>(rules[i].size()) != nd)
            throw ValidationError("rule table row " + std::to_string(i + 1) + " must cover degrees 0.." +
                                  std::to_string(nd - 1));
        if (rules[i][0] != profile[i])
            throw std::logic_error("degree-0 rule for basis element " + std::to_string(i + 1) +
                                   " disagrees with the profile");
    }
    std::vector<std::uint64_t> count_of_degree(static_cast<std::size_t>(nd));
    for (int k = 0; k < nd; ++k) count_of_degree[k] = (q - 1) * checked_pow_u64(q, static_cast<std::uint64_t>(k));
    ValuationProfile out;
    std::function<void(std::size_t, const Rational*, std::uint64_t)> rec = [&](std::size_t i, const Rational* cur,
                                                                                std::uint64_t count) {
        if (i == rules.size()) {
            if (cur) out.add(*cur, count);
            return;
        }
        rec(i + 1, cur, count);
        for (int k = 0; k < nd; ++k) {
            const Rational& v = rules[i][k];
            const Rational* next = (cur && *cur < v) ? cur : &v;
            const std::uint64_t c = count_of_degree[k];
            if (c != 0 && count > std::numeric_limits<std::uint64_t>::max() / c)
                throw BudgetExceeded("multiset count overflows");
            rec(i + 1, next, count * c);
        }
    };
    rec(0, nullptr, 1);
    return out;
}

ValuationProfile oracle_division_multiset(const DrinfeldModule& phi, const Poly& u, int n, const Place& w,
                                          std::uint64_t budget) {
    check_engine_inputs(phi, w, u, n, true);
    const std::uint64_t size =
        checked_pow_u64(phi.q(), static_cast<std::uint64_t>(phi.rank()) * n * u.degree());
    if (size > budget)
        throw BudgetExceeded("budget exceeded: q^{r n d} = " + std::to_string(size) + " > " + std::to_string(budget));
    return root_valuations(phi_of(phi, u.pow(static_cast<std::uint64_t>(n))), w, std::nullopt);
}

DegreeRules degree_rules_infinite(const LatticeModel& L, int d, int n) {
    const int nd = n * d;
    DegreeRules rules;
    for (auto& g : L.generators) {
        std::vector<Rational> row;
        for (int k = 0; k < nd; ++k) row.push_back(exp_valuation(L, g + L.w0 * k - L.w0 * nd));
        rules.push_back(std::move(row));
    }
    return rules;
}

DegreeRules degree_rules_finite(const SMBProfile& good_part, const LatticeModel& L, int d, int n,
                                const Rational& shift) {
    const int nd = n * d;
    DegreeRules rules;
    for (auto& g : good_part) rules.emplace_back(static_cast<std::size_t>(nd), Rational(g + shift));
    const std::uint64_t rr = static_cast<std::uint64_t>(L.reduced_rank);
    for (auto& g : L.generators) {
        std::vector<Rational> row;
        for (int k = 0; k < nd; ++k) {
            const Rational v = g * rpow(L.q, static_cast<std::int64_t>(rr * k) - static_cast<std::int64_t>(rr * nd));
            row.push_back(exp_valuation(L, v) + shift);
        }
        rules.push_back(std::move(row));
    }
    return rules;
}

DegreeRules degree_rules_closed_form(const Rational& w0, const Valuation& w1, const Valuation& w2, unsigned q, int d,
                                     int n) {
    const int nd = n * d;
    DegreeRules rules(2);
    for (int k = 0; k < nd; ++k) {
        auto [x1, x2] = xi_valuations(w0, w1, w2, q, nd - k);
        rules[0].push_back(x1);
        rules[1].push_back(x2);
    }
    return rules;
}

std::optional<ClosedForm> closed_form_for_module(const DrinfeldModule& phi, const Place& w, const Poly& u, int n) {
    const unsigned q = phi.q();
    const int d = u.degree();
    const int r = phi.rank();
    if (w.is_infinite()) {
        const Rational w0 = w.w_t();
        if (r == 2) return closed_form_rank2(w0, w.valuation(phi.a(1)), w.valuation(phi.a(2)), q, d, n, w.kind());
        const auto sup = phi.support();
        if (r >= 3 && sup.size() == 2)
            return closed_form_two_term(r, sup[0], w0, w.valuation(phi.a(sup[0])).value(),
                                        w.valuation(phi.a(r)).value(), q, d, n);
        return std::nullopt;
    }
    if (r != 2) return std::nullopt;
    const ReductionProfile rp = reduction_profile(phi, w);
    const Rational& tv = rp.twist_valuation;
    if (rp.reduced_rank == 1) {
        ClosedForm cf = closed_form_rank2(w.w_t(), rp.twisted_valuations[1], rp.twisted_valuations[2], q, d, n,
                                          PlaceKind::Finite, w.valuation(u).value());
        for (auto& v : *cf.division) v -= tv;
        return cf;
    }
    if (w.divides(u)) return std::nullopt;
    ClosedForm cf;
    cf.branch = "finite_good";
    cf.w_j = j_valuation(phi, w);
    cf.division = SMBProfile{Rational(-tv), Rational(-tv)};
    return cf;
}

SMBProfile good_part_valuations(const FieldPtr& F, const Place& w, const Poly& u, int n, int reduced_rank) {
    if (reduced_rank < 1) throw ValidationError("reduced rank must be at least 1");
    if (reduced_rank >= 2 && w.divides(u))
        throw HypothesisError("good-reduction representative is exact only for w not dividing u when r' >= 2");
    std::vector<RatFunc> c(static_cast<std::size_t>(reduced_rank) + 1, RatFunc(Poly(F)));
    c[0] = RatFunc(Poly::t(F));
    c.back() = RatFunc(Poly::constant(F, 1));
    DrinfeldModule psi(TwistedPoly(F, std::move(c)));
    RecursionOptions opts;
    opts.allow_place_dividing_u = reduced_rank == 1;
    return smb_recursion(psi, w, u, n, opts).at(n);
}

Prediction predict_for_module(const DrinfeldModule& phi, const Place& w, const Poly& u, int n, std::uint64_t budget) {
    check_engine_inputs(phi, w, u, n, false);
    const unsigned q = phi.q();
    const int d = u.degree();
    RecursionOptions opts;
    opts.budget = budget;
    Prediction out;
    if (w.is_infinite()) {
        int large = 0;
        RecursionTrace trace = smb_recursion_until_large(phi, w, u, n, large, opts);
        out.profile = trace.at(n);
        out.lattice = division_to_lattice(trace.at(large), q, d, large, w.w_t());
        out.lattice_level = large;
        out.rules = degree_rules_infinite(out.lattice, d, n);
    } else {
        const ReductionProfile rp = reduction_profile(phi, w);
        const Rational& tv = rp.twist_valuation;
        RecursionTrace trace = smb_recursion(phi, w, u, n, opts);
        out.profile = trace.at(n);
        SMBProfile twisted = out.profile;
        for (auto& v : twisted) v += tv;
        FiniteLatticeData data = division_to_lattice_finite(twisted, rp.reduced_rank, q, d, n);
        out.lattice = data.lattice;
        out.lattice_level = n;
        out.rules = degree_rules_finite(data.good_part, data.lattice, d, n, Rational(-tv));
    }
    out.multiset = predict_division_multiset(out.profile, out.rules, q, d, n);
    return out;
}

SMBAnalysis analyze_smb(const DrinfeldModule& phi, const Place& w, const Poly& u, int n, std::uint64_t budget) {
    SMBAnalysis out;
    RecursionOptions opts;
    opts.budget = budget;
    out.trace = smb_recursion(phi, w, u, n, opts);
    out.recursion = out.trace.at(n);
    if (!w.is_infinite()) out.reduction = reduction_profile(phi, w);
    out.closed_form = closed_form_for_module(phi, w, u, n);
    const int d = u.degree();
    if (out.closed_form) {
        const ClosedForm& cf = *out.closed_form;
        LatticeModel L;
        L.q = phi.q();
        L.generators = cf.lattice;
        if (w.is_infinite()) {
            L.kind = PlaceKind::Infinite;
            L.w0 = w.w_t();
            out.dictionary = lattice_to_division(L, d, n);
        } else {
            const Rational& tv = out.reduction->twist_valuation;
            L.kind = PlaceKind::Finite;
            L.reduced_rank = out.reduction->reduced_rank;
            SMBProfile dict =
                lattice_to_division_finite(L, good_part_valuations(phi.field(), w, u, n, L.reduced_rank), d, n);
            for (auto& v : dict) v -= tv;
            out.dictionary = dict;
        }
        out.dictionary_lattice = L;
        if (cf.division && *cf.division != out.recursion) out.agree = false;
    }
    if (out.dictionary && *out.dictionary != out.recursion) out.agree = false;
    return out;
}

} // namespace smb
