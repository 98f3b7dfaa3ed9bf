#include "maxcurves/curves.hpp"

#include <algorithm>

#include "maxcurves/numeric.hpp"

namespace maxcurves {

namespace {

// Slot a projective line stores its coordinate in.
enum class Slot { X, Y, Z };

Slot p1_slot(CurveId id) {
    switch (id) {
        case CurveId::P1x:
        case CurveId::P1u: return Slot::X;
        case CurveId::P1y:
        case CurveId::P1w: return Slot::Y;
        case CurveId::P1z:
        case CurveId::P1t: return Slot::Z;
        default: throw Error(Errc::BadParameter, "not a projective line");
    }
}

bool is_p1(CurveId id) {
    switch (id) {
        case CurveId::P1x:
        case CurveId::P1y:
        case CurveId::P1z:
        case CurveId::P1w:
        case CurveId::P1t:
        case CurveId::P1u: return true;
        default: return false;
    }
}

FieldElem& slot_ref(CurvePoint& pt, Slot s) {
    switch (s) {
        case Slot::X: return pt.x;
        case Slot::Y: return pt.y;
        default: return pt.z;
    }
}

const FieldElem& slot_ref(const CurvePoint& pt, Slot s) {
    switch (s) {
        case Slot::X: return pt.x;
        case Slot::Y: return pt.y;
        default: return pt.z;
    }
}

}  // namespace

const char* curve_name(CurveId id) {
    switch (id) {
        case CurveId::Hermitian: return "Hermitian";
        case CurveId::Xn: return "Xn";
        case CurveId::Cn: return "Cn";
        case CurveId::P1x: return "P1x";
        case CurveId::P1y: return "P1y";
        case CurveId::P1z: return "P1z";
        case CurveId::P1w: return "P1w";
        case CurveId::P1t: return "P1t";
        case CurveId::P1u: return "P1u";
    }
    return "?";
}

std::optional<CurveId> curve_from_name(const std::string& name) {
    for (CurveId id : {CurveId::Hermitian, CurveId::Xn, CurveId::Cn, CurveId::P1x, CurveId::P1y,
                       CurveId::P1z, CurveId::P1w, CurveId::P1t, CurveId::P1u}) {
        if (name == curve_name(id)) return id;
    }
    return std::nullopt;
}

CurveParams::CurveParams(std::shared_ptr<const FieldTower> tower) : tower_(std::move(tower)) {
    if (!tower_) throw Error(Errc::BadParameter, "tower must not be null");
    q_ = tower_->q();
    m_ = (q_pow(tower_->n()) + 1) / (q_ + 1);
}

std::uint64_t CurveParams::q_pow(std::uint32_t e) const {
    return checked_pow(q_, e);
}

CurveParams make_params(std::uint64_t p, std::uint32_t h, std::uint32_t n) {
    return CurveParams(std::make_shared<FieldTower>(p, h, n));
}

CurvePoint infinity_point(const CurveParams& params) {
    CurvePoint pt;
    pt.infinite = true;
    pt.x = pt.y = pt.z = params.tower().zero();
    return pt;
}

CurvePoint affine_point(FieldElem x, FieldElem y, FieldElem z) {
    CurvePoint pt;
    pt.x = std::move(x);
    pt.y = std::move(y);
    pt.z = std::move(z);
    return pt;
}

std::uint64_t genus(CurveId curve, const CurveParams& params) {
    const std::uint64_t q = params.q();
    switch (curve) {
        case CurveId::Hermitian: return q * (q - 1) / 2;
        case CurveId::Xn: return (q - 1) * (params.qn() - q) / 2;
        case CurveId::Cn:
            return (q - 1) * (params.q_pow(params.n() + 1) + params.qn() - q * q) / 2;
        default: return 0;
    }
}

std::uint64_t count_points(CurveId curve, const CurveParams& params, PointField field) {
    if (field == PointField::Quadratic && curve != CurveId::Hermitian) {
        throw Error(Errc::BadParameter, "quadratic-subfield counts only apply to the Hermitian curve");
    }
    const FieldTower& F = params.tower();
    const std::uint64_t full = F.cardinality();

    if (is_p1(curve)) return full + 1;

    std::uint64_t count = 0;
    if (curve == CurveId::Hermitian && field == PointField::Quadratic) {
        for (const FieldElem& y : F.enumerate_subfield(params.q() * params.q())) {
            count += F.additive_solution_count(AdditiveKind::TraceToQ, F.pow(y, params.q() + 1));
        }
        return count + 1;
    }

    for (std::uint64_t k = 0; k < full; ++k) {
        FieldElem y = F.element_at(k);
        switch (curve) {
            case CurveId::Hermitian:
                count += F.additive_solution_count(AdditiveKind::TraceToQ, F.pow(y, params.q() + 1));
                break;
            case CurveId::Xn:
                count += F.kummer_solution_count(params.m(),
                                                 F.sub(F.frobenius(y, 2 * F.h()), y));
                break;
            case CurveId::Cn: {
                std::uint64_t nx =
                    F.additive_solution_count(AdditiveKind::TraceToQ, F.pow(y, params.q() + 1));
                if (nx != 0) {
                    count += nx * F.kummer_solution_count(params.m(),
                                                          F.sub(F.frobenius(y, 2 * F.h()), y));
                }
                break;
            }
            default: break;
        }
    }
    return count + 1;
}

std::optional<std::uint64_t> closed_form_count(CurveId curve, const CurveParams& params) {
    const std::uint32_t n = params.n();
    switch (curve) {
        case CurveId::Xn:
            return params.q_pow(2 * n + 1) - params.q_pow(n + 2) + params.q_pow(n + 1) + 1;
        case CurveId::Cn:
            return params.q_pow(2 * n + 2) - params.q_pow(n + 3) + params.q_pow(n + 2) + 1;
        default: return std::nullopt;
    }
}

std::vector<CurvePoint> enumerate_points(CurveId curve, const CurveParams& params,
                                         std::uint64_t budget, PointField field) {
    const FieldTower& F = params.tower();
    const std::uint64_t expected = count_points(curve, params, field);
    if (expected > budget) {
        throw Error(Errc::BudgetExceeded, "point enumeration exceeds the budget");
    }

    std::vector<CurvePoint> points;
    points.reserve(expected);
    const FieldElem zero = F.zero();

    if (is_p1(curve)) {
        Slot s = p1_slot(curve);
        for (std::uint64_t k = 0; k < F.cardinality(); ++k) {
            CurvePoint pt = affine_point(zero, zero, zero);
            slot_ref(pt, s) = F.element_at(k);
            points.push_back(std::move(pt));
        }
        points.push_back(infinity_point(params));
        return points;
    }

    // z-lists keyed by pack(z^m), built in lex order of z.
    std::vector<std::vector<std::uint64_t>> kummer_preimages;
    if (curve == CurveId::Xn || curve == CurveId::Cn) {
        kummer_preimages.assign(F.cardinality(), {});
        for (std::uint64_t k = 0; k < F.cardinality(); ++k) {
            FieldElem z = F.element_at(k);
            kummer_preimages[F.pack(F.pow(z, params.m()))].push_back(F.pack(z));
        }
    }

    std::vector<FieldElem> fibers;
    if (field == PointField::Quadratic) {
        fibers = F.enumerate_subfield(params.q() * params.q());
        std::sort(fibers.begin(), fibers.end(), lex_less);
    }

    const std::uint64_t fiber_count =
        field == PointField::Quadratic ? fibers.size() : F.cardinality();
    for (std::uint64_t k = 0; k < fiber_count; ++k) {
        FieldElem y = field == PointField::Quadratic ? fibers[k] : F.element_at(k);
        switch (curve) {
            case CurveId::Hermitian:
                for (FieldElem& x : F.solve_additive(AdditiveKind::TraceToQ, F.pow(y, params.q() + 1))) {
                    points.push_back(affine_point(std::move(x), y, zero));
                }
                break;
            case CurveId::Xn:
                for (std::uint64_t code :
                     kummer_preimages[F.pack(F.sub(F.frobenius(y, 2 * F.h()), y))]) {
                    points.push_back(affine_point(zero, y, F.unpack(code)));
                }
                break;
            case CurveId::Cn: {
                auto xs = F.solve_additive(AdditiveKind::TraceToQ, F.pow(y, params.q() + 1));
                if (xs.empty()) break;
                const auto& zs = kummer_preimages[F.pack(F.sub(F.frobenius(y, 2 * F.h()), y))];
                for (const FieldElem& x : xs) {
                    for (std::uint64_t code : zs) {
                        points.push_back(affine_point(x, y, F.unpack(code)));
                    }
                }
                break;
            }
            default: break;
        }
    }
    points.push_back(infinity_point(params));
    return points;
}

bool is_on_curve(CurveId curve, const CurvePoint& point, const CurveParams& params) {
    if (point.infinite) return true;
    const FieldTower& F = params.tower();
    auto hermitian_eq = [&] {
        return F.add(F.frobenius(point.x, F.h()), point.x) == F.pow(point.y, params.q() + 1);
    };
    auto kummer_eq = [&] {
        return F.sub(F.frobenius(point.y, 2 * F.h()), point.y) == F.pow(point.z, params.m());
    };
    switch (curve) {
        case CurveId::Hermitian: return point.z.is_zero() && hermitian_eq();
        case CurveId::Xn: return point.x.is_zero() && kummer_eq();
        case CurveId::Cn: return hermitian_eq() && kummer_eq();
        default: {
            Slot s = p1_slot(curve);
            for (Slot other : {Slot::X, Slot::Y, Slot::Z}) {
                if (other != s && !slot_ref(point, other).is_zero()) return false;
            }
            return true;
        }
    }
}

std::uint64_t hasse_weil_upper_bound(std::uint64_t g, std::uint64_t q_prime) {
    return q_prime * q_prime + 1 + 2 * g * q_prime;
}

bool check_maximal(CurveId curve, const CurveParams& params) {
    return count_points(curve, params) ==
           hasse_weil_upper_bound(genus(curve, params), params.qn());
}

namespace {

bool has_edge(CurveId from, CurveId to) {
    switch (from) {
        case CurveId::Cn:
            return to == CurveId::Xn || to == CurveId::Hermitian || to == CurveId::P1x ||
                   to == CurveId::P1y || to == CurveId::P1z || to == CurveId::P1w ||
                   to == CurveId::P1t || to == CurveId::P1u;
        case CurveId::Xn: return to == CurveId::P1z;
        case CurveId::Hermitian: return to == CurveId::P1y || to == CurveId::P1x;
        case CurveId::P1y: return to == CurveId::P1w || to == CurveId::P1t;
        case CurveId::P1z: return to == CurveId::P1t;
        case CurveId::P1x: return to == CurveId::P1u;
        default: return false;
    }
}

}  // namespace

CurvePoint project(CurveId from, CurveId to, const CurvePoint& point, const CurveParams& params) {
    if (!has_edge(from, to)) throw Error(Errc::InvalidEdge, "no such edge in the cover diagram");
    if (!is_on_curve(from, point, params)) {
        throw Error(Errc::PointNotOnCurve, "projection input is not on the source curve");
    }
    if (point.infinite) return infinity_point(params);

    const FieldTower& F = params.tower();
    const FieldElem zero = F.zero();
    auto p1_value = [&](Slot s, const FieldElem& v) {
        CurvePoint pt = affine_point(zero, zero, zero);
        slot_ref(pt, s) = v;
        return pt;
    };

    switch (from) {
        case CurveId::Cn:
            switch (to) {
                case CurveId::Xn: return affine_point(zero, point.y, point.z);
                case CurveId::Hermitian: return affine_point(point.x, point.y, zero);
                case CurveId::P1x: return p1_value(Slot::X, point.x);
                case CurveId::P1y: return p1_value(Slot::Y, point.y);
                case CurveId::P1z: return p1_value(Slot::Z, point.z);
                case CurveId::P1w: return p1_value(Slot::Y, F.pow(point.y, params.q() + 1));
                case CurveId::P1t: return p1_value(Slot::Z, F.pow(point.z, params.m()));
                case CurveId::P1u: return p1_value(Slot::X, F.pow(point.x, params.q() - 1));
                default: break;
            }
            break;
        case CurveId::Xn:
            if (to == CurveId::P1z) return p1_value(Slot::Z, point.z);
            break;
        case CurveId::Hermitian:
            if (to == CurveId::P1y) return p1_value(Slot::Y, point.y);
            if (to == CurveId::P1x) return p1_value(Slot::X, point.x);
            break;
        case CurveId::P1y:
            if (to == CurveId::P1w) return p1_value(Slot::Y, F.pow(point.y, params.q() + 1));
            if (to == CurveId::P1t) {
                return p1_value(Slot::Z, F.sub(F.frobenius(point.y, 2 * F.h()), point.y));
            }
            break;
        case CurveId::P1z:
            if (to == CurveId::P1t) return p1_value(Slot::Z, F.pow(point.z, params.m()));
            break;
        case CurveId::P1x:
            if (to == CurveId::P1u) return p1_value(Slot::X, F.pow(point.x, params.q() - 1));
            break;
        default: break;
    }
    throw Error(Errc::InvalidEdge, "no such edge in the cover diagram");
}

CurveStats curve_stats(CurveId curve, const CurveParams& params) {
    CurveStats stats;
    stats.genus = genus(curve, params);
    stats.count = count_points(curve, params);
    stats.weil_bound = hasse_weil_upper_bound(stats.genus, params.qn());
    stats.maximal = stats.count == stats.weil_bound;
    return stats;
}

}  // namespace maxcurves
