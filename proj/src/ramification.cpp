#include "smb/ramification.hpp"

#include "smb/errors.hpp"

#include <algorithm>

namespace smb {

namespace {

void require_index(unsigned p, const Rational& E, const char* name) {
    if (!is_integer(E) || E < 1) throw ValidationError(std::string(name) + " must be a positive integer");
    if (divides(p, E)) throw HypothesisError(std::string("p divides ") + name);
}

} // namespace

PiecewiseLinear PiecewiseLinear::identity() {
    return from_vertices({{Rational(-1), Rational(-1)}}, Rational(1));
}

PiecewiseLinear PiecewiseLinear::from_vertices(std::vector<std::pair<Rational, Rational>> vertices,
                                               Rational final_slope) {
    if (vertices.empty() || vertices.front().first != -1) throw ValidationError("first vertex must be at y = -1");
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i].first <= vertices[i - 1].first) throw ValidationError("vertices must increase strictly");
    PiecewiseLinear f;
    f.v_ = std::move(vertices);
    f.final_slope_ = std::move(final_slope);
    f.normalize();
    return f;
}

PiecewiseLinear PiecewiseLinear::from_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) throw ValidationError("no pieces");
    std::vector<std::pair<Rational, Rational>> verts;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        if (i + 1 < pieces.size()) {
            if (!p.to || *p.to != pieces[i + 1].from) throw ValidationError("pieces must be contiguous");
            const Rational left = p.slope * *p.to + p.intercept;
            const Rational right = pieces[i + 1].slope * *p.to + pieces[i + 1].intercept;
            if (left != right) throw ValidationError("discontinuity at y = " + to_string(*p.to));
        } else if (p.to) {
            throw ValidationError("last piece must be unbounded");
        }
        verts.emplace_back(p.from, p.slope * p.from + p.intercept);
    }
    return from_vertices(std::move(verts), pieces.back().slope);
}

void PiecewiseLinear::normalize() {
    std::vector<std::pair<Rational, Rational>> out;
    out.push_back(v_.front());
    for (std::size_t i = 1; i < v_.size(); ++i) {
        const auto& a = out.back();
        const auto& b = v_[i];
        const Rational s_in = (b.second - a.second) / (b.first - a.first);
        const Rational s_out = i + 1 < v_.size()
                                   ? Rational((v_[i + 1].second - b.second) / (v_[i + 1].first - b.first))
                                   : final_slope_;
        if (s_in != s_out) out.push_back(b);
    }
    v_ = std::move(out);
}

Rational PiecewiseLinear::operator()(const Rational& y) const {
    if (y < -1) throw ValidationError("argument below -1");
    std::size_t i = v_.size() - 1;
    while (i > 0 && v_[i].first > y) --i;
    const Rational slope = i + 1 < v_.size()
                               ? Rational((v_[i + 1].second - v_[i].second) / (v_[i + 1].first - v_[i].first))
                               : final_slope_;
    return v_[i].second + slope * (y - v_[i].first);
}

Rational PiecewiseLinear::inverse(const Rational& z) const {
    if (!is_increasing()) throw ValidationError("inverse of a non-increasing map");
    if (z < v_.front().second) throw ValidationError("value below the range");
    std::size_t i = v_.size() - 1;
    while (i > 0 && v_[i].second > z) --i;
    const Rational slope = i + 1 < v_.size()
                               ? Rational((v_[i + 1].second - v_[i].second) / (v_[i + 1].first - v_[i].first))
                               : final_slope_;
    return v_[i].first + (z - v_[i].second) / slope;
}

std::vector<Piece> PiecewiseLinear::pieces() const {
    std::vector<Piece> out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        Piece p;
        p.from = v_[i].first;
        if (i + 1 < v_.size()) {
            p.to = v_[i + 1].first;
            p.slope = (v_[i + 1].second - v_[i].second) / (v_[i + 1].first - v_[i].first);
        } else {
            p.slope = final_slope_;
        }
        p.intercept = v_[i].second - p.slope * v_[i].first;
        out.push_back(std::move(p));
    }
    return out;
}

bool PiecewiseLinear::is_convex() const {
    const auto ps = pieces();
    for (std::size_t i = 1; i < ps.size(); ++i)
        if (ps[i].slope < ps[i - 1].slope) return false;
    return true;
}

bool PiecewiseLinear::is_increasing() const {
    for (auto& p : pieces())
        if (p.slope <= 0) return false;
    return true;
}

bool PiecewiseLinear::is_identity_on_unit_interval() const {
    return (*this)(Rational(-1)) == -1 && (*this)(Rational(0)) == 0 && pieces().front().slope == 1;
}

void PiecewiseLinear::validate_psi() const {
    if (!is_identity_on_unit_interval()) throw ValidationError("psi must be the identity on [-1, 0]");
    if (!is_increasing()) throw ValidationError("psi must be increasing");
    if (!is_convex()) throw ValidationError("psi must be convex");
}

PiecewiseLinear plf_compose(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<Rational> xs;
    for (auto& v : g.vertices()) xs.push_back(v.first);
    const Rational g_min = g(Rational(-1));
    for (auto& v : f.vertices())
        if (v.first >= g_min) xs.push_back(g.inverse(v.first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Rational, Rational>> verts;
    for (auto& x : xs) verts.emplace_back(x, f(g(x)));
    return PiecewiseLinear::from_vertices(std::move(verts), Rational(f.final_slope() * g.final_slope()));
}

std::pair<int, std::vector<Rational>> infinite_wild_breaks(unsigned q, const Rational& w_j, const Rational& w0) {
    const Rational qq = q;
    if (w0 >= 0) throw ValidationError("w0 must be negative at an infinite place");
    if (!(w_j < w0 * qq)) throw HypothesisError("w(j) >= w0 q: tame case");
    int m = 0;
    for (int k = 1; k < 4096; ++k) {
        const Rational hi = w0 * rpow(q, k);
        const Rational lo = w0 * rpow(q, k + 1);
        if (w_j == hi) throw HypothesisError("w(j) on an interval boundary");
        if (lo < w_j && w_j < hi) {
            m = k;
            break;
        }
    }
    if (m == 0) throw HypothesisError("w(j) outside the wild intervals");
    std::vector<Rational> r(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) r[k - 1] = (-w_j + w0 * rpow(q, k)) / (qq - 1);
    return {m, r};
}

PiecewiseLinear psi_infinite_wild(unsigned q, const Rational& w_j, const Rational& w0, const Rational& E) {
    const unsigned p = characteristic_of(q);
    if (!is_integer(w_j)) throw ValidationError("w(j) must be an integer");
    if (divides(p, w_j)) throw HypothesisError("p divides w(j)");
    require_index(p, E, "E");
    auto [m, r] = infinite_wild_breaks(q, w_j, w0);
    const Rational qq = q;
    const Rational qm = rpow(q, m);
    // Piece j has slope q^j E and lies on [r_{m-j+1}, r_{m-j}].
    auto piece = [&](int j, const Rational& y) {
        const Rational qj = rpow(q, j);
        return Rational(qj * E * y + w_j * E * (qj - 1) / (qq - 1) - w0 * j * E * qm);
    };
    std::vector<std::pair<Rational, Rational>> verts{{Rational(-1), Rational(-1)}, {Rational(0), Rational(0)}};
    for (int j = 0; j < m; ++j) {
        const Rational& y = r[static_cast<std::size_t>(m - j - 1)];
        const Rational left = piece(j, y);
        if (left != piece(j + 1, y)) throw std::logic_error("wild psi pieces do not meet");
        verts.emplace_back(y, left);
    }
    return PiecewiseLinear::from_vertices(std::move(verts), Rational(qm * E));
}

PiecewiseLinear psi_splitting_field(unsigned q_s, const Rational& v_c, const Rational& v_a, const Rational& e) {
    const unsigned p = characteristic_of(q_s);
    if (!is_integer(v_c)) throw ValidationError("v_c must be an integer");
    if (divides(p, v_c)) throw HypothesisError("p divides v_c");
    require_index(p, e, "e");
    const Rational qs = q_s;
    if (!(-v_c / qs < v_a - v_c)) throw HypothesisError("Newton polygon is not a single segment");
    const Rational R = v_a * qs / (qs - 1) - v_c;
    if (R <= 0) throw HypothesisError("R <= 0: tame");
    return PiecewiseLinear::from_vertices({{Rational(-1), Rational(-1)}, {Rational(0), Rational(0)}, {R, e * R}},
                                          Rational(e * qs));
}

PiecewiseLinear psi_finite_bad(unsigned q, int d, int n, const Rational& E, const Rational& R) {
    const unsigned p = characteristic_of(q);
    if (d < 1 || n < 1) throw ValidationError("d and n must be at least 1");
    if (R <= 0) throw HypothesisError("good reduction: tame");
    const Rational w_j = -R * (q - 1);
    if (!is_integer(w_j)) throw ValidationError("R (q - 1) must be an integer");
    if (divides(p, w_j)) throw HypothesisError("p divides w(j)");
    require_index(p, E, "E");
    const Rational qnd = rpow(q, static_cast<std::int64_t>(n) * d);
    return PiecewiseLinear::from_vertices({{Rational(-1), Rational(-1)}, {Rational(0), Rational(0)}, {R, E * R}},
                                          Rational(qnd * E));
}

PiecewiseLinear psi_tame(const Rational& E) {
    if (E < 1) throw ValidationError("tame index must be at least 1");
    return PiecewiseLinear::from_vertices({{Rational(-1), Rational(-1)}, {Rational(0), Rational(0)}}, E);
}

FiltrationReport filtration_from_psi(const PiecewiseLinear& psi) {
    psi.validate_psi();
    FiltrationReport out;
    if (!is_integer(psi.final_slope())) throw ValidationError("final slope must be an integer");
    out.g0_order = psi.final_slope().get_num();
    for (auto& p : psi.pieces()) {
        if (!p.to || *p.to <= 0) continue;
        const Rational order = Rational(out.g0_order) / p.slope;
        if (!is_integer(order)) throw ValidationError("slope does not divide the inertia order");
        out.breaks.push_back({*p.to, psi(*p.to), order.get_num()});
    }
    return out;
}

PiecewiseLinear psi_from_filtration(const FiltrationReport& report) {
    std::vector<std::pair<Rational, Rational>> verts{{Rational(-1), Rational(-1)}, {Rational(0), Rational(0)}};
    Rational y = 0, v = 0;
    for (auto& b : report.breaks) {
        const Rational slope = Rational(report.g0_order) / Rational(b.order);
        v += slope * (b.upper - y);
        y = b.upper;
        verts.emplace_back(y, v);
    }
    return PiecewiseLinear::from_vertices(std::move(verts), Rational(report.g0_order));
}

Rational conductor_from_breaks(const std::vector<RankStep>& steps, int r) {
    if (steps.empty() || steps.front().from != 0) throw ValidationError("rank function must start at y = 0");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].rank < 0 || steps[i].rank > r) throw ValidationError("rank exceeds r");
        if (i > 0 && steps[i].from <= steps[i - 1].from) throw ValidationError("rank breaks must increase");
        if (i > 0 && steps[i].rank < steps[i - 1].rank) throw ValidationError("rank function must be non-decreasing");
    }
    if (steps.back().rank != r) throw ValidationError("rank function must reach r");
    Rational out = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        out += Rational(r - steps[i].rank) * (steps[i + 1].from - steps[i].from);
    return out;
}

std::vector<RankStep> rank_steps_from_filtration(const FiltrationReport& report, int r, int rank_nontrivial) {
    if (report.breaks.empty()) return {{Rational(0), r}};
    return {{Rational(0), rank_nontrivial}, {report.breaks.back().upper, r}};
}

} // namespace smb
