#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "maxcurves/curves.hpp"
#include "maxcurves/errors.hpp"

namespace maxcurves {

using Rational = boost::rational<long long>;

/// The covers with known ramification data.  The first four are wildly
/// ramified at the point over infinity; Cn over Hermitian is tame.
enum class CoverId { CnOverXn, XnOverP1z, CnOverP1z, HqOverP1y, CnOverHq };

const char* cover_name(CoverId id);
std::optional<CoverId> cover_from_name(const std::string& name);

/// Lower-numbering ramification filtration at a totally ramified point.
/// segments[k] says |G_i| = group_order for every index i up to and
/// including end_index (starting after the previous segment); the orders
/// are strictly decreasing and the filtration is trivial past the last
/// segment.  An empty segment list is the trivial filtration.
struct FiltrationSegment {
    std::uint64_t end_index;
    std::uint64_t group_order;

    bool operator==(const FiltrationSegment&) const = default;
};

struct RamificationFiltration {
    std::vector<FiltrationSegment> segments;

    bool operator==(const RamificationFiltration&) const = default;

    /// |G_0|, the ramification index.
    std::uint64_t e0() const;
    /// |G_i| for an arbitrary index.
    std::uint64_t order_at(std::uint64_t index) const;
    /// Indices where the filtration drops (the segment ends).
    std::vector<std::uint64_t> lower_jumps() const;
};

/// Branch data for one cover: every wild point carries its filtration,
/// tame points are grouped by ramification index.
struct TameBranchPoints {
    std::uint64_t count;
    std::uint64_t ramification_index;
};

struct CoverDescription {
    std::string name;
    std::uint64_t degree = 1;
    std::uint64_t genus_top = 0;
    std::uint64_t genus_bottom = 0;
    std::vector<RamificationFiltration> wild_points;
    std::vector<TameBranchPoints> tame_points;
};

/// The published jump indices (lower numbering) for the four wild covers.
std::vector<std::uint64_t> known_lower_jumps(CoverId cover, const CurveParams& params);

/// Full filtration for the four wild covers; the middle segment of
/// Cn/P1z is pinned by the Riemann-Hurwitz check.
RamificationFiltration build_filtration(CoverId cover, const CurveParams& params);

/// Degree, genera, and branch data for any of the five covers.
CoverDescription cover_description(CoverId cover, const CurveParams& params);

/// Sum of (|G_i| - 1) over all indices, the local different exponent.
std::uint64_t different_exponent(const RamificationFiltration& filtration);

/// Exact check of 2g' - 2 = deg (2g - 2) + sum of branch contributions.
bool riemann_hurwitz_check(const CoverDescription& cover);

/// Herbrand functions: phi(u) integrates 1/(G_0 : G_t); psi is its inverse.
/// Both are piecewise linear, increasing, and fix 0.
Rational phi(const Rational& u, const RamificationFiltration& filtration);
Rational psi(const Rational& v, const RamificationFiltration& filtration);

/// Images of the lower jumps under phi.
std::vector<Rational> upper_jumps(const RamificationFiltration& filtration);

/// Filtration of G/H in lower numbering, from the filtration of G and the
/// order function of a compatible normal subgroup (H_i = G_i intersect H,
/// presented in the same segment format).
RamificationFiltration quotient_filtration(const RamificationFiltration& filtration,
                                           const RamificationFiltration& subgroup_orders);

/// Orders of vanishing of the coordinate functions at the totally ramified
/// points of Cn; t = z^(q^(n-3))/x is a uniformizer at the point over
/// infinity.  Negative entries are pole orders.
struct PointValuations {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;
    std::int64_t t = 0;
};

struct ValuationTable {
    PointValuations at_zero;
    PointValuations at_infinity;
};

ValuationTable valuation_table(const CurveParams& params);

/// Sparse truncated power series in the uniformizer z at the origin of Cn.
/// Coefficients live in the tower field; exponents at or past the
/// precision are dropped.
struct LocalSeries {
    std::map<std::int64_t, FieldElem> coefficients;
    std::uint64_t precision = 0;

    bool is_zero() const { return coefficients.empty(); }
    std::int64_t leading_exponent() const;
};

LocalSeries series_monomial(const FieldTower& field, std::int64_t exponent,
                            std::uint64_t precision);
LocalSeries series_add(const FieldTower& field, const LocalSeries& a, const LocalSeries& b);
LocalSeries series_sub(const FieldTower& field, const LocalSeries& a, const LocalSeries& b);
LocalSeries series_mul(const FieldTower& field, const LocalSeries& a, const LocalSeries& b);
LocalSeries series_pow(const FieldTower& field, const LocalSeries& a, std::uint64_t exponent);

struct LocalExpansion {
    LocalSeries y_series;
    LocalSeries x_series;
};

/// Solve y^(q^2) - y = z^m and x^q + x = y^(q+1) for y and x as series in
/// z, truncated at the given precision (which must exceed q^n + 1).
LocalExpansion local_expand_P0(const CurveParams& params, std::uint64_t precision);

/// Integer bookkeeping for the obstruction to lifting the extra
/// automorphism from the Hermitian quotient: the claimed zero order
/// (q^(n-3) - 1)(q^3 + 1) leaves the residual 2 q^(n-3) (q^(n-3) - 1),
/// which vanishes exactly when n = 3.
struct LiftingObstruction {
    std::uint64_t claimed_zero_order = 0;
    std::uint64_t residual = 0;
    bool lifts_possible = false;
};

LiftingObstruction lifting_obstruction(std::uint64_t p, std::uint32_t h, std::uint32_t n);
LiftingObstruction lifting_obstruction(const CurveParams& params);

/// |Gamma| against the Hurwitz bound 84(g - 1) for Cn.
struct HurwitzRatio {
    std::uint64_t group_order = 0;
    std::uint64_t hurwitz_bound = 0;
    Rational ratio;
};

HurwitzRatio hurwitz_ratio(const CurveParams& params);

}  // namespace maxcurves
