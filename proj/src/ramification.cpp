#include "maxcurves/ramification.hpp"

#include <algorithm>

#include "maxcurves/numeric.hpp"

namespace maxcurves {

namespace {

void validate_filtration(const RamificationFiltration& f) {
    std::uint64_t prev_end = 0;
    std::uint64_t prev_order = ~0ull;
    bool first = true;
    for (const FiltrationSegment& seg : f.segments) {
        if (seg.group_order < 1 || seg.group_order >= prev_order) {
            throw Error(Errc::BadParameter, "segment orders must be strictly decreasing");
        }
        if (!first && seg.end_index <= prev_end) {
            throw Error(Errc::BadParameter, "segment end indices must increase");
        }
        if (f.e0() % seg.group_order != 0) {
            throw Error(Errc::BadParameter, "segment orders must divide the ramification index");
        }
        prev_end = seg.end_index;
        prev_order = seg.group_order;
        first = false;
    }
}

std::int64_t tame_contribution(const TameBranchPoints& t) {
    return static_cast<std::int64_t>(t.count) *
           (static_cast<std::int64_t>(t.ramification_index) - 1);
}

}  // namespace

const char* cover_name(CoverId id) {
    switch (id) {
        case CoverId::CnOverXn: return "Cn/Xn";
        case CoverId::XnOverP1z: return "Xn/P1z";
        case CoverId::CnOverP1z: return "Cn/P1z";
        case CoverId::HqOverP1y: return "Hq/P1y";
        case CoverId::CnOverHq: return "Cn/Hq";
    }
    return "?";
}

std::optional<CoverId> cover_from_name(const std::string& name) {
    for (CoverId id : {CoverId::CnOverXn, CoverId::XnOverP1z, CoverId::CnOverP1z,
                       CoverId::HqOverP1y, CoverId::CnOverHq}) {
        if (name == cover_name(id)) return id;
    }
    return std::nullopt;
}

std::uint64_t RamificationFiltration::e0() const {
    return segments.empty() ? 1 : segments.front().group_order;
}

std::uint64_t RamificationFiltration::order_at(std::uint64_t index) const {
    for (const FiltrationSegment& seg : segments) {
        if (index <= seg.end_index) return seg.group_order;
    }
    return 1;
}

std::vector<std::uint64_t> RamificationFiltration::lower_jumps() const {
    std::vector<std::uint64_t> jumps;
    for (const FiltrationSegment& seg : segments) jumps.push_back(seg.end_index);
    return jumps;
}

std::vector<std::uint64_t> known_lower_jumps(CoverId cover, const CurveParams& params) {
    switch (cover) {
        case CoverId::CnOverXn: return {params.qn() + 1};
        case CoverId::XnOverP1z: return {params.m()};
        case CoverId::CnOverP1z: return {params.m(), params.qn() + 1};
        case CoverId::HqOverP1y: return {params.q() + 1};
        case CoverId::CnOverHq: break;
    }
    throw Error(Errc::UnknownCover, "no published jump data for this cover");
}

RamificationFiltration build_filtration(CoverId cover, const CurveParams& params) {
    const std::uint64_t q = params.q();
    switch (cover) {
        case CoverId::CnOverXn: return {{{params.qn() + 1, q}}};
        case CoverId::XnOverP1z: return {{{params.m(), q * q}}};
        case CoverId::CnOverP1z: return {{{params.m(), q * q * q}, {params.qn() + 1, q}}};
        case CoverId::HqOverP1y: return {{{q + 1, q}}};
        case CoverId::CnOverHq: break;
    }
    throw Error(Errc::UnknownCover, "cover is tamely ramified; it has no wild filtration");
}

CoverDescription cover_description(CoverId cover, const CurveParams& params) {
    const std::uint64_t q = params.q();
    CoverDescription desc;
    desc.name = cover_name(cover);
    switch (cover) {
        case CoverId::CnOverXn:
            desc.degree = q;
            desc.genus_top = genus(CurveId::Cn, params);
            desc.genus_bottom = genus(CurveId::Xn, params);
            desc.wild_points = {build_filtration(cover, params)};
            break;
        case CoverId::XnOverP1z:
            desc.degree = q * q;
            desc.genus_top = genus(CurveId::Xn, params);
            desc.wild_points = {build_filtration(cover, params)};
            break;
        case CoverId::CnOverP1z:
            desc.degree = q * q * q;
            desc.genus_top = genus(CurveId::Cn, params);
            desc.wild_points = {build_filtration(cover, params)};
            break;
        case CoverId::HqOverP1y:
            desc.degree = q;
            desc.genus_top = genus(CurveId::Hermitian, params);
            desc.wild_points = {build_filtration(cover, params)};
            break;
        case CoverId::CnOverHq:
            // Kummer cover of degree m, branched at the q^3 + 1 points of
            // the Hermitian curve with y^(q+1) = x^q + x meeting z = 0,
            // plus nothing else: all branch points are tame.
            desc.degree = params.m();
            desc.genus_top = genus(CurveId::Cn, params);
            desc.genus_bottom = genus(CurveId::Hermitian, params);
            desc.tame_points = {{q * q * q + 1, params.m()}};
            break;
    }
    return desc;
}

std::uint64_t different_exponent(const RamificationFiltration& filtration) {
    validate_filtration(filtration);
    std::uint64_t total = 0;
    std::uint64_t covered = 0;  // indices 0 .. covered-1 already handled
    for (const FiltrationSegment& seg : filtration.segments) {
        total += (seg.end_index + 1 - covered) * (seg.group_order - 1);
        covered = seg.end_index + 1;
    }
    return total;
}

bool riemann_hurwitz_check(const CoverDescription& cover) {
    const std::int64_t lhs = 2 * static_cast<std::int64_t>(cover.genus_top) - 2;
    std::int64_t rhs = static_cast<std::int64_t>(cover.degree) *
                       (2 * static_cast<std::int64_t>(cover.genus_bottom) - 2);
    for (const RamificationFiltration& f : cover.wild_points) {
        rhs += static_cast<std::int64_t>(different_exponent(f));
    }
    for (const TameBranchPoints& t : cover.tame_points) rhs += tame_contribution(t);
    return lhs == rhs;
}

Rational phi(const Rational& u, const RamificationFiltration& filtration) {
    validate_filtration(filtration);
    if (u < Rational(0)) throw Error(Errc::BadParameter, "phi is defined for u >= 0");
    const long long e0 = static_cast<long long>(filtration.e0());
    Rational value(0);
    Rational pos(0);
    for (const FiltrationSegment& seg : filtration.segments) {
        Rational end(static_cast<long long>(seg.end_index));
        Rational slope(static_cast<long long>(seg.group_order), e0);
        if (u <= end) return value + (u - pos) * slope;
        value += (end - pos) * slope;
        pos = end;
    }
    return value + (u - pos) * Rational(1, e0);
}

Rational psi(const Rational& v, const RamificationFiltration& filtration) {
    validate_filtration(filtration);
    if (v < Rational(0)) throw Error(Errc::BadParameter, "psi is defined for v >= 0");
    const long long e0 = static_cast<long long>(filtration.e0());
    Rational value(0);  // lower coordinate
    Rational pos(0);    // upper coordinate
    for (const FiltrationSegment& seg : filtration.segments) {
        Rational slope(static_cast<long long>(seg.group_order), e0);
        Rational end = phi(Rational(static_cast<long long>(seg.end_index)), filtration);
        if (v <= end) return value + (v - pos) / slope;
        value = Rational(static_cast<long long>(seg.end_index));
        pos = end;
    }
    return value + (v - pos) * Rational(e0);
}

std::vector<Rational> upper_jumps(const RamificationFiltration& filtration) {
    std::vector<Rational> jumps;
    for (std::uint64_t j : filtration.lower_jumps()) {
        jumps.push_back(phi(Rational(static_cast<long long>(j)), filtration));
    }
    return jumps;
}

RamificationFiltration quotient_filtration(const RamificationFiltration& filtration,
                                           const RamificationFiltration& subgroup_orders) {
    validate_filtration(filtration);
    validate_filtration(subgroup_orders);
    if (filtration.order_at(0) % subgroup_orders.order_at(0) != 0) {
        throw Error(Errc::IncompatibleSubgroup, "subgroup order does not divide the group order");
    }

    // Merged breakpoints of the two order functions.
    std::vector<std::uint64_t> ends;
    for (const FiltrationSegment& seg : filtration.segments) ends.push_back(seg.end_index);
    for (const FiltrationSegment& seg : subgroup_orders.segments) ends.push_back(seg.end_index);
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    // Quotient order function in upper numbering: on the image of the
    // interval (prev, end] under phi, the quotient has order |G_u| / |H_u|.
    struct UpperInterval {
        Rational end;
        std::uint64_t order;
    };
    std::vector<UpperInterval> upper;
    std::uint64_t prev_order = ~0ull;
    for (std::uint64_t end : ends) {
        std::uint64_t g = filtration.order_at(end);
        std::uint64_t h = subgroup_orders.order_at(end);
        if (g % h != 0) {
            throw Error(Errc::IncompatibleSubgroup,
                        "subgroup order does not divide the group order at every index");
        }
        std::uint64_t c = g / h;
        if (c > prev_order) {
            throw Error(Errc::IncompatibleSubgroup, "quotient orders are not weakly decreasing");
        }
        Rational v = phi(Rational(static_cast<long long>(end)), filtration);
        if (!upper.empty() && upper.back().order == c) {
            upper.back().end = v;
        } else {
            upper.push_back({v, c});
        }
        prev_order = c;
    }

    // Convert upper numbering back to lower numbering with the quotient's
    // own Herbrand function, built interval by interval.
    RamificationFiltration result;
    const std::uint64_t e0 = upper.empty() ? 1 : upper.front().order;
    Rational w(0), v_prev(0);
    for (const UpperInterval& iv : upper) {
        w += (iv.end - v_prev) * Rational(static_cast<long long>(e0),
                                          static_cast<long long>(iv.order));
        v_prev = iv.end;
        if (iv.order > 1) {
            if (w.denominator() != 1) {
                throw Error(Errc::IncompatibleSubgroup,
                            "quotient filtration has a non-integer jump");
            }
            result.segments.push_back(
                {static_cast<std::uint64_t>(w.numerator()), iv.order});
        }
    }
    validate_filtration(result);
    return result;
}

ValuationTable valuation_table(const CurveParams& params) {
    const std::int64_t q = static_cast<std::int64_t>(params.q());
    const std::int64_t m = static_cast<std::int64_t>(params.m());
    const std::int64_t qn1 = static_cast<std::int64_t>(params.qn()) + 1;
    const std::int64_t s = static_cast<std::int64_t>(params.q_pow(params.n() - 3));

    ValuationTable table;
    // At the origin z is the uniformizer; the curve equations force the
    // rest: v(y^(q^2) - y) = v(y) = m v(z) and v(x^q + x) = v(x) = (q+1) v(y).
    table.at_zero.z = 1;
    table.at_zero.y = m;
    table.at_zero.x = qn1;  // (q+1) m = q^n + 1
    table.at_zero.t = s - qn1;
    // Over the pole of y the ramification index of Cn/P1y is qm, so
    // v(y) = -qm; the equations then force v(z) and v(x).
    table.at_infinity.y = -q * m;
    table.at_infinity.x = -qn1;       // q v(x) = (q+1) v(y)
    table.at_infinity.z = -q * q * q;  // m v(z) = q^2 v(y)
    table.at_infinity.t = s * table.at_infinity.z - table.at_infinity.x;
    return table;
}

std::int64_t LocalSeries::leading_exponent() const {
    if (coefficients.empty()) {
        throw Error(Errc::BadParameter, "the zero series has no leading exponent");
    }
    return coefficients.begin()->first;
}

namespace {

void series_insert(const FieldTower& field, LocalSeries& s, std::int64_t exponent,
                   const FieldElem& value) {
    if (value.is_zero() || exponent >= static_cast<std::int64_t>(s.precision)) return;
    auto [it, fresh] = s.coefficients.emplace(exponent, value);
    if (!fresh) {
        it->second = field.add(it->second, value);
        if (it->second.is_zero()) s.coefficients.erase(it);
    }
}

}  // namespace

LocalSeries series_monomial(const FieldTower& field, std::int64_t exponent,
                            std::uint64_t precision) {
    LocalSeries s;
    s.precision = precision;
    series_insert(field, s, exponent, field.one());
    return s;
}

LocalSeries series_add(const FieldTower& field, const LocalSeries& a, const LocalSeries& b) {
    LocalSeries s;
    s.precision = std::min(a.precision, b.precision);
    for (const auto& [e, c] : a.coefficients) series_insert(field, s, e, c);
    for (const auto& [e, c] : b.coefficients) series_insert(field, s, e, c);
    return s;
}

LocalSeries series_sub(const FieldTower& field, const LocalSeries& a, const LocalSeries& b) {
    LocalSeries s;
    s.precision = std::min(a.precision, b.precision);
    for (const auto& [e, c] : a.coefficients) series_insert(field, s, e, c);
    for (const auto& [e, c] : b.coefficients) series_insert(field, s, e, field.neg(c));
    return s;
}

LocalSeries series_mul(const FieldTower& field, const LocalSeries& a, const LocalSeries& b) {
    LocalSeries s;
    s.precision = std::min(a.precision, b.precision);
    for (const auto& [ea, ca] : a.coefficients) {
        for (const auto& [eb, cb] : b.coefficients) {
            if (ea + eb >= static_cast<std::int64_t>(s.precision)) continue;
            series_insert(field, s, ea + eb, field.mul(ca, cb));
        }
    }
    return s;
}

LocalSeries series_pow(const FieldTower& field, const LocalSeries& a, std::uint64_t exponent) {
    LocalSeries result = series_monomial(field, 0, a.precision);
    LocalSeries base = a;
    while (exponent > 0) {
        if (exponent & 1) result = series_mul(field, result, base);
        exponent >>= 1;
        if (exponent > 0) base = series_mul(field, base, base);
    }
    return result;
}

LocalExpansion local_expand_P0(const CurveParams& params, std::uint64_t precision) {
    if (precision <= params.qn() + 1) {
        throw Error(Errc::PrecisionTooLow, "precision must exceed q^n + 1");
    }
    const FieldTower& F = params.tower();
    const std::uint64_t q = params.q();

    // y = y^(q^2) - z^m, iterated from 0; each pass multiplies the
    // valuation of the correction by q^2, so convergence is fast.
    LocalSeries zm = series_monomial(F, static_cast<std::int64_t>(params.m()), precision);
    LocalSeries y;
    y.precision = precision;
    for (int round = 0; round < 200; ++round) {
        LocalSeries next = series_sub(F, series_pow(F, y, q * q), zm);
        if (next.coefficients == y.coefficients) break;
        y = std::move(next);
    }

    // x = y^(q+1) - x^q, iterated from 0.
    LocalSeries target = series_pow(F, y, q + 1);
    LocalSeries x;
    x.precision = precision;
    for (int round = 0; round < 200; ++round) {
        LocalSeries next = series_sub(F, target, series_pow(F, x, q));
        if (next.coefficients == x.coefficients) break;
        x = std::move(next);
    }
    return {std::move(y), std::move(x)};
}

LiftingObstruction lifting_obstruction(std::uint64_t p, std::uint32_t h, std::uint32_t n) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, "p must be prime");
    if (h < 1) throw Error(Errc::BadParameter, "h must be at least 1");
    if (n < 3 || n % 2 == 0) throw Error(Errc::EvenOrSmallN, "n must be odd and at least 3");
    const std::uint64_t q = checked_pow(p, h);
    const std::uint64_t s = checked_pow(q, n - 3);  // q^(n-3)
    const std::uint64_t q3 = q * q * q;

    // Matching pole orders at the point over infinity leaves a zero of
    // order (q^(n-3) - 1)(q^3 + 1) to account for at the origin; the
    // valuation identity there misses it by 2 q^(n-3) (q^(n-3) - 1).
    LiftingObstruction result;
    result.claimed_zero_order = (s - 1) * (q3 + 1);
    result.residual = 2 * s * (s - 1);
    result.lifts_possible = result.residual == 0;
    return result;
}

LiftingObstruction lifting_obstruction(const CurveParams& params) {
    return lifting_obstruction(params.p(), params.tower().h(), params.n());
}

HurwitzRatio hurwitz_ratio(const CurveParams& params) {
    const std::uint64_t g = genus(CurveId::Cn, params);
    if (g < 2) throw Error(Errc::GenusTooSmall, "Hurwitz bound needs genus at least 2");
    const std::uint64_t q = params.q();
    HurwitzRatio result;
    result.group_order = q * q * q * (params.qn() + 1) * (q - 1);
    result.hurwitz_bound = 84 * (g - 1);
    result.ratio = Rational(static_cast<long long>(result.group_order),
                            static_cast<long long>(result.hurwitz_bound));
    return result;
}

}  // namespace maxcurves
