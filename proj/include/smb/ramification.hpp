#ifndef SMB_RAMIFICATION_HPP
#define SMB_RAMIFICATION_HPP

#include "smb/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace smb {

struct Piece {
    Rational from;
    std::optional<Rational> to; // absent for the last, unbounded piece
    Rational slope;
    Rational intercept;
};

// Continuous piecewise-linear map on [-1, inf), stored as its vertices and
// the slope after the last vertex. Kept in normal form: no vertex joins two
// pieces of equal slope.
class PiecewiseLinear {
public:
    static PiecewiseLinear identity();
    // vertices must start at x = -1 and increase strictly.
    static PiecewiseLinear from_vertices(std::vector<std::pair<Rational, Rational>> vertices, Rational final_slope);
    // Checks that consecutive pieces meet.
    static PiecewiseLinear from_pieces(const std::vector<Piece>& pieces);

    Rational operator()(const Rational& y) const;
    Rational inverse(const Rational& z) const;

    const std::vector<std::pair<Rational, Rational>>& vertices() const { return v_; }
    const Rational& final_slope() const { return final_slope_; }
    std::vector<Piece> pieces() const;

    bool is_convex() const;
    bool is_increasing() const;
    bool is_identity_on_unit_interval() const;
    // Throws unless identity on [-1, 0], convex and increasing.
    void validate_psi() const;

    bool operator==(const PiecewiseLinear& o) const { return v_ == o.v_ && final_slope_ == o.final_slope_; }
    bool operator!=(const PiecewiseLinear& o) const { return !(*this == o); }

private:
    void normalize();

    std::vector<std::pair<Rational, Rational>> v_;
    Rational final_slope_;
};

// f o g
PiecewiseLinear plf_compose(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Infinite place, w(j) < w0 q with p not dividing w(j); E the tame index.
PiecewiseLinear psi_infinite_wild(unsigned q, const Rational& w_j, const Rational& w0, const Rational& E);
// Upper breaks r_n = (-w(j) + w0 q^n)/(q - 1) for n = 1..m, and m.
std::pair<int, std::vector<Rational>> infinite_wild_breaks(unsigned q, const Rational& w_j, const Rational& w0);
// Splitting field of X^{q^s} + a X - c with v_a = w(a), v_c = w(c).
PiecewiseLinear psi_splitting_field(unsigned q_s, const Rational& v_c, const Rational& v_a, const Rational& e);
// Finite place, bad reduction, R = -w(j)/(q-1).
PiecewiseLinear psi_finite_bad(unsigned q, int d, int n, const Rational& E, const Rational& R);
PiecewiseLinear psi_tame(const Rational& E);

struct FiltrationBreak {
    Rational upper;  // y
    Rational lower;  // psi(y)
    Integer order;   // #G^y on the piece ending at y
};

struct FiltrationReport {
    Integer g0_order;
    std::vector<FiltrationBreak> breaks;
};

FiltrationReport filtration_from_psi(const PiecewiseLinear& psi);
PiecewiseLinear psi_from_filtration(const FiltrationReport& report);

struct RankStep {
    Rational from; // rank holds on (from, next from]
    int rank;
};

// integral over y > 0 of (r - rank(y)) dy
Rational conductor_from_breaks(const std::vector<RankStep>& steps, int r);
// Rank rank_nontrivial while the wild group is nontrivial, r afterwards.
std::vector<RankStep> rank_steps_from_filtration(const FiltrationReport& report, int r, int rank_nontrivial);

} // namespace smb

#endif
