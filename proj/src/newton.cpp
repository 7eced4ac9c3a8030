#include "smb/newton.hpp"

#include "smb/errors.hpp"

#include <algorithm>

namespace smb {

Rational NewtonPolygon::slope(std::size_t i) const {
    return (vertices[i + 1].y - vertices[i].y) / Rational(vertices[i + 1].x - vertices[i].x);
}

NewtonPolygon lower_hull(const std::vector<std::pair<std::int64_t, Valuation>>& points) {
    std::vector<HullPoint> pts;
    for (auto& [x, v] : points)
        if (!v.is_infinite()) pts.push_back({x, v.value()});
    if (pts.size() < 2) throw ValidationError("Newton polygon needs at least two finite points");
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x == pts[i - 1].x) throw ValidationError("Newton polygon points must have distinct x");
    // Monotone chain; pop while the turn is not strictly convex.
    std::vector<HullPoint> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            const HullPoint& a = hull[hull.size() - 2];
            const HullPoint& b = hull.back();
            const Rational cross = (b.y - a.y) * Rational(p.x - a.x) - (p.y - a.y) * Rational(b.x - a.x);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return NewtonPolygon{std::move(hull)};
}

void ValuationProfile::add(const Rational& v, std::uint64_t mult) {
    if (mult == 0) return;
    m_[v] += mult;
}

void ValuationProfile::merge(const ValuationProfile& o) {
    for (auto& [v, m] : o.m_) add(v, m);
}

bool ValuationProfile::contains(const ValuationProfile& o) const {
    for (auto& [v, m] : o.m_) {
        auto it = m_.find(v);
        if (it == m_.end() || it->second < m) return false;
    }
    return true;
}

void ValuationProfile::subtract(const ValuationProfile& o) {
    if (!contains(o)) throw std::logic_error("multiset difference of a non-contained profile");
    for (auto& [v, m] : o.m_) {
        auto it = m_.find(v);
        it->second -= m;
        if (it->second == 0) m_.erase(it);
    }
}

std::uint64_t ValuationProfile::total() const {
    std::uint64_t n = 0;
    for (auto& e : m_) n += e.second;
    return n;
}

const Rational& ValuationProfile::max() const {
    if (m_.empty()) throw std::logic_error("max of an empty profile");
    return m_.begin()->first;
}

ValuationProfile profile_from_polygon(const NewtonPolygon& poly) {
    ValuationProfile out;
    for (std::size_t i = 0; i < poly.segment_count(); ++i)
        out.add(Rational(-poly.slope(i)), static_cast<std::uint64_t>(poly.span(i)));
    return out;
}

namespace {

std::int64_t checked_pow(unsigned q, std::size_t k) {
    std::int64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > (std::int64_t{1} << 62) / q) throw BudgetExceeded("Newton polygon abscissa overflows");
        v *= q;
    }
    return v;
}

} // namespace

NewtonPolygon newton_polygon_from_valuations(const std::vector<Valuation>& vals, unsigned q,
                                             const std::optional<Valuation>& shift) {
    std::vector<std::pair<std::int64_t, Valuation>> pts;
    if (shift) {
        if (shift->is_infinite()) throw ValidationError("shift must be a nonzero constant");
        pts.emplace_back(0, *shift);
        for (std::size_t k = 0; k < vals.size(); ++k) pts.emplace_back(checked_pow(q, k), vals[k]);
    } else {
        if (vals.empty() || vals[0].is_infinite())
            throw ValidationError("P(X)/X needs a nonzero linear coefficient");
        for (std::size_t k = 0; k < vals.size(); ++k) pts.emplace_back(checked_pow(q, k) - 1, vals[k]);
    }
    return lower_hull(pts);
}

NewtonPolygon newton_polygon(const TwistedPoly& P, const Place& w, const std::optional<Valuation>& shift) {
    std::vector<Valuation> vals;
    for (auto& c : P.coeffs()) vals.push_back(w.valuation(c));
    return newton_polygon_from_valuations(vals, P.field()->q(), shift);
}

ValuationProfile root_valuations(const TwistedPoly& P, const Place& w, const std::optional<Valuation>& shift) {
    return profile_from_polygon(newton_polygon(P, w, shift));
}

} // namespace smb
