#ifndef SMB_NEWTON_HPP
#define SMB_NEWTON_HPP

#include "smb/place.hpp"
#include "smb/twisted.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace smb {

struct HullPoint {
    std::int64_t x;
    Rational y;
    bool operator==(const HullPoint& o) const { return x == o.x && y == o.y; }
};

struct NewtonPolygon {
    std::vector<HullPoint> vertices; // increasing x, strictly convex
    std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    Rational slope(std::size_t i) const;
    std::int64_t span(std::size_t i) const { return vertices[i + 1].x - vertices[i].x; }
};

// Lower convex hull of the finite points; collinear interior points are
// dropped. Needs at least two finite points with distinct x.
NewtonPolygon lower_hull(const std::vector<std::pair<std::int64_t, Valuation>>& points);

// Multiset of valuations, kept in strictly decreasing order of valuation.
class ValuationProfile {
public:
    using Map = std::map<Rational, std::uint64_t, std::greater<Rational>>;

    void add(const Rational& v, std::uint64_t mult = 1);
    void merge(const ValuationProfile& o);
    // Removes o; throws if o is not contained.
    void subtract(const ValuationProfile& o);
    bool contains(const ValuationProfile& o) const;

    const Map& entries() const { return m_; }
    bool empty() const { return m_.empty(); }
    std::uint64_t total() const;
    const Rational& max() const;
    bool operator==(const ValuationProfile& o) const { return m_ == o.m_; }
    bool operator!=(const ValuationProfile& o) const { return m_ != o.m_; }

private:
    Map m_;
};

ValuationProfile profile_from_polygon(const NewtonPolygon& poly);

// Points (q^k - 1, w(c_k)) for P(X)/X, or (0, w(c)) and (q^k, w(c_k)) for
// P(X) - c when a shift valuation is given.
NewtonPolygon newton_polygon(const TwistedPoly& P, const Place& w, const std::optional<Valuation>& shift);
NewtonPolygon newton_polygon_from_valuations(const std::vector<Valuation>& coeff_vals, unsigned q,
                                             const std::optional<Valuation>& shift);

ValuationProfile root_valuations(const TwistedPoly& P, const Place& w, const std::optional<Valuation>& shift);

} // namespace smb

#endif
