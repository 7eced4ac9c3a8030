#include "smb/closed_form.hpp"

#include "smb/errors.hpp"

namespace smb {

namespace {

void check_common(unsigned q, int d, int n) {
    if (q < 2) throw ValidationError("q must be at least 2");
    if (d < 1) throw ValidationError("deg u must be at least 1");
    if (n < 1) throw ValidationError("n must be at least 1");
}

Rational Q(unsigned q, long e) {
    return rpow(q, e);
}

} // namespace

int interval_index(const Rational& wj, const Rational& w0, unsigned q, int s, const Rational& c) {
    for (int m = 1; m < 4096; ++m) {
        const Rational hi = w0 * Q(q, static_cast<long>(m) * s) * c;
        const Rational lo = w0 * Q(q, static_cast<long>(m + 1) * s) * c;
        if (lo < wj && wj <= hi) return m;
    }
    throw HypothesisError("w(j) outside the case (1) intervals");
}

std::pair<Rational, Rational> xi_valuations(const Rational& w0, const Valuation& w1, const Valuation& w2, unsigned q,
                                            int k) {
    if (w2.is_infinite()) throw ValidationError("a_2 must be nonzero");
    const Rational W2 = w2.value();
    const Valuation wj = w1.is_infinite() ? Valuation::infinity()
                                          : Valuation(Rational(w1.value() * (q + 1) - W2));
    const Rational qq = q;
    if (!wj.is_infinite() && wj.value() < w0 * qq) {
        const Rational W1 = w1.value();
        const int m = interval_index(wj.value(), w0, q, 1, 1);
        const Rational x1 = -(w0 * (k - 1) + (W1 - w0) / (qq - 1));
        Rational x2;
        if (k <= m)
            x2 = -(W2 + W1 * (Q(q, k) - qq - 1)) / ((qq - 1) * Q(q, k));
        else
            x2 = -(w0 * (k - m) + (W2 + W1 * (Q(q, m) - qq - 1)) / ((qq - 1) * Q(q, m)));
        return {x1, x2};
    }
    const Rational x = -(w0 * (k - 1) + (W2 - w0) / (qq * qq - 1));
    return {x, x};
}

ClosedForm closed_form_rank2(const Rational& w0, const Valuation& w1, const Valuation& w2, unsigned q, int d, int n,
                             PlaceKind kind, const Rational& w_u) {
    check_common(q, d, n);
    if (w2.is_infinite()) throw ValidationError("a_2 must be nonzero");
    ClosedForm cf;
    const Rational qq = q;
    cf.w_j = w1.is_infinite() ? Valuation::infinity() : Valuation(Rational(w1.value() * (q + 1) - w2.value()));
    const int nd = n * d;
    if (kind == PlaceKind::Finite) {
        if (w1.is_infinite() || w1.value() != 0 || w2.value() <= 0)
            throw HypothesisError("finite-place closed form needs the stable bad signature w(a_1) = 0 < w(a_2)");
        cf.branch = "finite_bad";
        const Rational wj = cf.w_j.value();
        const Rational omega1 = w_u / ((Q(q, d) - 1) * Q(q, static_cast<long>(n - 1) * d));
        const Rational omega2_0 = wj / (qq - 1);
        cf.lattice = {omega2_0};
        cf.division = SMBProfile{omega1, wj / ((qq - 1) * Q(q, nd))};
        return cf;
    }
    if (w0 >= 0) throw ValidationError("w0 must be negative at an infinite place");
    auto [x1, x2] = xi_valuations(w0, w1, w2, q, nd);
    cf.division = SMBProfile{x1, x2};
    if (!cf.w_j.is_infinite() && cf.w_j.value() < w0 * qq) {
        const Rational wj = cf.w_j.value();
        const Rational W1 = w1.value();
        const int m = interval_index(wj, w0, q, 1, 1);
        cf.branch = "case1";
        cf.m = m;
        cf.lattice = {w0 + w0 / (qq - 1) - W1 / (qq - 1), w0 * m + wj / ((qq - 1) * Q(q, m)) - W1 / (qq - 1)};
        cf.dictionary_applies = nd >= m;
    } else {
        cf.branch = "case2";
        const Rational c = w0 + w0 / (qq * qq - 1) - w2.value() / (qq * qq - 1);
        cf.lattice = {c, c};
    }
    return cf;
}

ClosedForm closed_form_two_term(int r, int s, const Rational& w0, const Rational& ws, const Rational& wr, unsigned q,
                                int d, int n) {
    check_common(q, d, n);
    if (s < 1 || s >= r) throw ValidationError("two-term shape needs 1 <= s < r");
    if (w0 >= 0) throw ValidationError("w0 must be negative at an infinite place");
    const Rational qq = q;
    const Rational qs = Q(q, s), qr = Q(q, r);
    const Rational c = (Q(q, r - s) - 1) / (qq - 1);
    ClosedForm cf;
    const Rational wj = ws * (qr - 1) / (qq - 1) - wr * (qs - 1) / (qq - 1);
    cf.w_j = Valuation(wj);
    const int nd = n * d;
    if (wj < w0 * qs * c) {
        const int m = interval_index(wj, w0, q, s, c);
        cf.branch = "case1";
        cf.m = m;
        const Rational low = w0 + w0 / (qs - 1) - ws / (qs - 1);
        const Rational high = w0 * m + wj * (qq - 1) / (Q(q, static_cast<long>(m) * s) * (qs - 1) * (Q(q, r - s) - 1)) -
                              ws / (qs - 1);
        for (int i = 1; i <= r; ++i) cf.lattice.push_back(i <= s ? low : high);
        cf.dictionary_applies = nd >= m;
    } else {
        cf.branch = "case2";
        const Rational v = w0 + w0 / (qr - 1) - wr / (qr - 1);
        cf.lattice.assign(r, v);
    }
    if (cf.dictionary_applies) {
        SMBProfile div;
        for (auto& o : cf.lattice) div.push_back(-w0 * nd + o);
        cf.division = div;
    }
    return cf;
}

} // namespace smb
