#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxcurves/curves.hpp"

namespace maxcurves {

/// Translation-type automorphism of Cn determined by (a, b) in F_{q^2}^2
/// with a^q + a = b^(q+1):  x -> x + b^q y + a,  y -> y + b,  z -> z.
struct UnitaryTranslation {
    FieldElem a, b;

    bool operator==(const UnitaryTranslation&) const = default;
};

/// Torus automorphism g^k for a fixed generator g of the cyclic factor:
/// x -> w^(q^n+1) x, y -> w^m y, z -> w z with w a primitive L-th root of
/// unity, L = (q^n + 1)(q - 1).  k is stored reduced mod L.
struct TorusElement {
    std::uint64_t k = 0;

    bool operator==(const TorusElement&) const = default;
};

/// Element of the full automorphism group in normal form: the torus part
/// acts first, the translation part second.
struct GammaElement {
    UnitaryTranslation u;
    TorusElement t;

    bool operator==(const GammaElement&) const = default;
};

/// Distinguished subgroups: Q = all translations (order q^3), Z = its
/// center (order q), Sigma = the torus (order L), M and N the subgroups of
/// Sigma of order m and q^n + 1, Gamma = Q . Sigma, and two products.
enum class SubgroupId { Q, Z, Sigma, M, N, Gamma, QxM, ZxN };

const char* subgroup_name(SubgroupId id);

struct StructureReport {
    std::uint64_t order = 0;
    std::uint64_t exponent = 0;
    std::uint64_t center_order = 0;
    std::uint64_t derived_subgroup_order = 0;
    bool is_abelian = false;
    bool is_elementary_abelian = false;
};

struct Orbit {
    std::uint64_t size = 0;
    CurvePoint representative;
};

struct OrbitDecomposition {
    std::vector<Orbit> orbits;  // sorted by size, then by representative discovery order

    std::vector<std::uint64_t> sizes() const;
};

inline constexpr std::uint64_t kDefaultGroupBudget = 1'000'000;

/// The automorphism group of Cn together with its action on points.
class GammaGroup {
public:
    explicit GammaGroup(CurveParams params);

    const CurveParams& params() const { return params_; }
    /// Order L of the torus factor.
    std::uint64_t torus_order() const { return torus_order_; }
    /// The primitive L-th root of unity the torus generator scales z by.
    const FieldElem& torus_root() const { return zeta_; }

    UnitaryTranslation make_unitary(const FieldElem& a, const FieldElem& b) const;
    UnitaryTranslation unitary_identity() const;
    UnitaryTranslation compose(const UnitaryTranslation& u1, const UnitaryTranslation& u2) const;
    UnitaryTranslation inverse(const UnitaryTranslation& u) const;

    /// Conjugation of a translation by the k-th torus power:
    /// (a, b) -> (w^(k(q^n+1)) a, w^(km) b).
    UnitaryTranslation torus_twist(const TorusElement& t, const UnitaryTranslation& u) const;

    GammaElement identity() const;
    GammaElement make_element(const UnitaryTranslation& u, std::uint64_t torus_exponent) const;
    GammaElement compose(const GammaElement& g1, const GammaElement& g2) const;
    GammaElement inverse(const GammaElement& g) const;
    std::uint64_t element_order(const GammaElement& g) const;

    /// Image of a point of Cn (torus part first, then translation part).
    CurvePoint act(const GammaElement& g, const CurvePoint& point) const;

    std::uint64_t subgroup_order(SubgroupId id) const;
    std::vector<GammaElement> enumerate_subgroup(SubgroupId id,
                                                 std::uint64_t budget = kDefaultGroupBudget) const;
    /// Generators used for subgroup enumeration, orbit walks, and centers.
    std::vector<GammaElement> subgroup_generators(SubgroupId id) const;

    StructureReport structure_report(SubgroupId id,
                                     std::uint64_t budget = kDefaultGroupBudget) const;
    /// Structure of the quotient of one enumerated subgroup by a normal one.
    StructureReport quotient_structure_report(SubgroupId group, SubgroupId normal,
                                              std::uint64_t budget = kDefaultGroupBudget) const;

    /// Orbit decomposition of the subgroup acting on all points of Cn.
    OrbitDecomposition orbits(SubgroupId id, std::uint64_t budget = kDefaultPointBudget) const;

    /// Whether two affine points lie in the same orbit of the full group,
    /// decided by the z-coordinate criterion: both z = 0, or (z2/z1)^L = 1.
    bool same_gamma_orbit(const CurvePoint& p1, const CurvePoint& p2) const;

    /// True when no translation other than the identity fixes an affine point.
    bool semiregular_check(std::uint64_t budget = kDefaultPointBudget) const;

    /// Torus powers whose twist fixes every translation / every central one.
    bool twist_fixes_q(std::uint64_t k) const;
    bool twist_fixes_z(std::uint64_t k) const;

    /// Validates torus-by-translation conjugation both algebraically and on
    /// sampled points; samples = 0 checks every (k, translation) pair.
    bool check_conjugation_law(std::uint64_t samples = 0, std::uint64_t seed = 2024) const;

private:
    FieldElem zeta_power(std::uint64_t e) const;
    CurvePoint apply_unchecked(const GammaElement& g, const CurvePoint& point) const;

    CurveParams params_;
    std::uint64_t torus_order_;
    std::uint64_t exp_x_;  // (q^n + 1) mod L
    std::uint64_t exp_y_;  // m mod L
    FieldElem zeta_;
    std::vector<FieldElem> zeta_pow_;
};

/// Orbit sizes of the full group on Cn predicted by its order and the
/// branch structure: one fixed point, one orbit of size q^3, and
/// (q^(n-1) - 1)/(q - 1) regular orbits.
std::vector<std::uint64_t> expected_gamma_orbit_profile(const CurveParams& params);

}  // namespace maxcurves
