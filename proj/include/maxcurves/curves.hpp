#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maxcurves/field.hpp"

namespace maxcurves {

/// Curves in the tower of covers.  Hermitian: x^q + x = y^(q+1) in (x, y);
/// Xn: y^(q^2) - y = z^m in (y, z); Cn: both equations in (x, y, z); the
/// remaining entries are projective lines named after the coordinate they
/// carry (w = y^(q+1), t = z^m, u = x^(q-1)).
enum class CurveId { Hermitian, Xn, Cn, P1x, P1y, P1z, P1w, P1t, P1u };

const char* curve_name(CurveId id);
std::optional<CurveId> curve_from_name(const std::string& name);

/// Shared numeric context: q = p^h, odd n >= 3, m = (q^n + 1)/(q + 1), and
/// the tower the coordinates live in.
class CurveParams {
public:
    explicit CurveParams(std::shared_ptr<const FieldTower> tower);

    const FieldTower& tower() const { return *tower_; }
    std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
    std::uint64_t p() const { return tower_->p(); }
    std::uint64_t q() const { return q_; }
    std::uint32_t n() const { return tower_->n(); }
    std::uint64_t m() const { return m_; }
    std::uint64_t q_pow(std::uint32_t e) const;  // q^e, checked
    std::uint64_t qn() const { return q_pow(tower_->n()); }

private:
    std::shared_ptr<const FieldTower> tower_;
    std::uint64_t q_;
    std::uint64_t m_;
};

CurveParams make_params(std::uint64_t p, std::uint32_t h, std::uint32_t n);

/// A point on one of the curves.  Unused coordinate slots stay zero; each
/// projective line stores its value in the slot of the coordinate it came
/// from (P1w in y, P1t in z, P1u in x).
struct CurvePoint {
    bool infinite = false;
    FieldElem x, y, z;

    bool operator==(const CurvePoint&) const = default;
};

CurvePoint infinity_point(const CurveParams& params);
CurvePoint affine_point(FieldElem x, FieldElem y, FieldElem z);

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// Which rational-point set to work over: the full tower field F_{q^{2n}}
/// or the quadratic subfield F_{q^2} (Hermitian only).
enum class PointField { Full, Quadratic };

std::uint64_t genus(CurveId curve, const CurveParams& params);

/// Number of points over the chosen field, counted fiberwise over y (plus
/// the unique point at infinity for Hermitian/Xn/Cn).
std::uint64_t count_points(CurveId curve, const CurveParams& params,
                           PointField field = PointField::Full);

/// Closed-form count over the full field, available for Xn and Cn.
std::optional<std::uint64_t> closed_form_count(CurveId curve, const CurveParams& params);

/// All points over the chosen field, affine points in lex order of (y, then
/// remaining coordinates), infinity last.
std::vector<CurvePoint> enumerate_points(CurveId curve, const CurveParams& params,
                                         std::uint64_t budget = kDefaultPointBudget,
                                         PointField field = PointField::Full);

bool is_on_curve(CurveId curve, const CurvePoint& point, const CurveParams& params);

/// Upper Weil bound q'^2 + 1 + 2 g q' for a genus-g curve over F_{q'^2}.
std::uint64_t hasse_weil_upper_bound(std::uint64_t g, std::uint64_t q_prime);

/// Whether the curve attains the Weil upper bound over F_{q^{2n}}.
bool check_maximal(CurveId curve, const CurveParams& params);

/// Image of a point under one edge of the cover diagram.
CurvePoint project(CurveId from, CurveId to, const CurvePoint& point, const CurveParams& params);

struct CurveStats {
    std::uint64_t genus = 0;
    std::uint64_t count = 0;
    std::uint64_t weil_bound = 0;
    bool maximal = false;
};

CurveStats curve_stats(CurveId curve, const CurveParams& params);

}  // namespace maxcurves
