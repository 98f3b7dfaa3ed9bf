#include "maxcurves/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>

#include "maxcurves/numeric.hpp"

namespace maxcurves {

namespace {

using Key3 = std::array<std::uint64_t, 3>;

struct Key3Hash {
    std::size_t operator()(const Key3& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t v : k) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

const char* subgroup_name(SubgroupId id) {
    switch (id) {
        case SubgroupId::Q: return "Q";
        case SubgroupId::Z: return "Z";
        case SubgroupId::Sigma: return "Sigma";
        case SubgroupId::M: return "M";
        case SubgroupId::N: return "N";
        case SubgroupId::Gamma: return "Gamma";
        case SubgroupId::QxM: return "QxM";
        case SubgroupId::ZxN: return "ZxN";
    }
    return "?";
}

std::vector<std::uint64_t> OrbitDecomposition::sizes() const {
    std::vector<std::uint64_t> out;
    out.reserve(orbits.size());
    for (const Orbit& o : orbits) out.push_back(o.size);
    return out;
}

GammaGroup::GammaGroup(CurveParams params) : params_(std::move(params)) {
    const FieldTower& F = params_.tower();
    torus_order_ = (params_.qn() + 1) * (params_.q() - 1);
    exp_x_ = (params_.qn() + 1) % torus_order_;
    exp_y_ = params_.m() % torus_order_;
    zeta_ = F.root_of_unity(torus_order_);
    zeta_pow_.reserve(torus_order_);
    FieldElem acc = F.one();
    for (std::uint64_t i = 0; i < torus_order_; ++i) {
        zeta_pow_.push_back(acc);
        acc = F.mul(acc, zeta_);
    }
}

FieldElem GammaGroup::zeta_power(std::uint64_t e) const {
    return zeta_pow_[e % torus_order_];
}

UnitaryTranslation GammaGroup::make_unitary(const FieldElem& a, const FieldElem& b) const {
    const FieldTower& F = params_.tower();
    const std::uint64_t q2 = params_.q() * params_.q();
    if (!F.in_subfield(a, q2) || !F.in_subfield(b, q2)) {
        throw Error(Errc::InvalidElement, "translation parameters must lie in F_{q^2}");
    }
    if (F.add(F.frobenius(a, F.h()), a) != F.pow(b, params_.q() + 1)) {
        throw Error(Errc::InvalidElement, "translation parameters violate a^q + a = b^(q+1)");
    }
    return UnitaryTranslation{a, b};
}

UnitaryTranslation GammaGroup::unitary_identity() const {
    return UnitaryTranslation{params_.tower().zero(), params_.tower().zero()};
}

UnitaryTranslation GammaGroup::compose(const UnitaryTranslation& u1,
                                       const UnitaryTranslation& u2) const {
    const FieldTower& F = params_.tower();
    FieldElem a = F.add(F.add(u1.a, u2.a), F.mul(F.frobenius(u1.b, F.h()), u2.b));
    return UnitaryTranslation{std::move(a), F.add(u1.b, u2.b)};
}

UnitaryTranslation GammaGroup::inverse(const UnitaryTranslation& u) const {
    const FieldTower& F = params_.tower();
    return UnitaryTranslation{F.frobenius(u.a, F.h()), F.neg(u.b)};
}

UnitaryTranslation GammaGroup::torus_twist(const TorusElement& t,
                                           const UnitaryTranslation& u) const {
    const FieldTower& F = params_.tower();
    const std::uint64_t k = t.k % torus_order_;
    return UnitaryTranslation{F.mul(zeta_power(k * exp_x_), u.a),
                              F.mul(zeta_power(k * exp_y_), u.b)};
}

GammaElement GammaGroup::identity() const {
    return GammaElement{unitary_identity(), TorusElement{0}};
}

GammaElement GammaGroup::make_element(const UnitaryTranslation& u,
                                      std::uint64_t torus_exponent) const {
    return GammaElement{u, TorusElement{torus_exponent % torus_order_}};
}

GammaElement GammaGroup::compose(const GammaElement& g1, const GammaElement& g2) const {
    return GammaElement{compose(g1.u, torus_twist(g1.t, g2.u)),
                        TorusElement{(g1.t.k + g2.t.k) % torus_order_}};
}

GammaElement GammaGroup::inverse(const GammaElement& g) const {
    TorusElement tinv{(torus_order_ - g.t.k % torus_order_) % torus_order_};
    return GammaElement{torus_twist(tinv, inverse(g.u)), tinv};
}

std::uint64_t GammaGroup::element_order(const GammaElement& g) const {
    const GammaElement id = identity();
    GammaElement acc = g;
    std::uint64_t order = 1;
    while (!(acc == id)) {
        acc = compose(acc, g);
        ++order;
    }
    return order;
}

CurvePoint GammaGroup::apply_unchecked(const GammaElement& g, const CurvePoint& point) const {
    if (point.infinite) return point;
    const FieldTower& F = params_.tower();
    const std::uint64_t k = g.t.k % torus_order_;
    FieldElem x = F.mul(zeta_power(k * exp_x_), point.x);
    FieldElem y = F.mul(zeta_power(k * exp_y_), point.y);
    FieldElem z = F.mul(zeta_power(k), point.z);
    x = F.add(F.add(x, F.mul(F.frobenius(g.u.b, F.h()), y)), g.u.a);
    y = F.add(y, g.u.b);
    return affine_point(std::move(x), std::move(y), std::move(z));
}

CurvePoint GammaGroup::act(const GammaElement& g, const CurvePoint& point) const {
    if (!is_on_curve(CurveId::Cn, point, params_)) {
        throw Error(Errc::PointNotOnCurve, "automorphisms act only on points of Cn");
    }
    return apply_unchecked(g, point);
}

std::uint64_t GammaGroup::subgroup_order(SubgroupId id) const {
    const std::uint64_t q = params_.q();
    const std::uint64_t q3 = q * q * q;
    switch (id) {
        case SubgroupId::Q: return q3;
        case SubgroupId::Z: return q;
        case SubgroupId::Sigma: return torus_order_;
        case SubgroupId::M: return params_.m();
        case SubgroupId::N: return params_.qn() + 1;
        case SubgroupId::Gamma: return q3 * torus_order_;
        case SubgroupId::QxM: return q3 * params_.m();
        case SubgroupId::ZxN: return q * (params_.qn() + 1);
    }
    throw Error(Errc::BadParameter, "unknown subgroup");
}

namespace {

struct TorusRange {
    std::uint64_t step;
    std::uint64_t count;
};

}  // namespace

std::vector<GammaElement> GammaGroup::enumerate_subgroup(SubgroupId id,
                                                         std::uint64_t budget) const {
    const std::uint64_t order = subgroup_order(id);
    if (order > budget) throw Error(Errc::BudgetExceeded, "subgroup larger than the budget");

    const FieldTower& F = params_.tower();
    auto translations = [&](bool central) {
        std::vector<UnitaryTranslation> us;
        if (central) {
            for (const FieldElem& a : F.solve_additive(AdditiveKind::TraceToQ, F.zero())) {
                us.push_back(UnitaryTranslation{a, F.zero()});
            }
        } else {
            std::vector<FieldElem> bs = F.enumerate_subfield(params_.q() * params_.q());
            std::sort(bs.begin(), bs.end(), lex_less);
            for (const FieldElem& b : bs) {
                for (const FieldElem& a :
                     F.solve_additive(AdditiveKind::TraceToQ, F.pow(b, params_.q() + 1))) {
                    us.push_back(UnitaryTranslation{a, b});
                }
            }
        }
        return us;
    };

    auto torus_range = [&](SubgroupId sid) -> TorusRange {
        switch (sid) {
            case SubgroupId::Sigma: return {1, torus_order_};
            case SubgroupId::M: return {torus_order_ / params_.m(), params_.m()};
            case SubgroupId::N: return {params_.q() - 1, params_.qn() + 1};
            default: return {0, 1};
        }
    };

    std::vector<GammaElement> elems;
    elems.reserve(order);
    switch (id) {
        case SubgroupId::Q:
        case SubgroupId::Z:
            for (const UnitaryTranslation& u : translations(id == SubgroupId::Z)) {
                elems.push_back(make_element(u, 0));
            }
            break;
        case SubgroupId::Sigma:
        case SubgroupId::M:
        case SubgroupId::N: {
            TorusRange r = torus_range(id);
            for (std::uint64_t j = 0; j < r.count; ++j) {
                elems.push_back(make_element(unitary_identity(), j * r.step));
            }
            break;
        }
        case SubgroupId::Gamma:
        case SubgroupId::QxM:
        case SubgroupId::ZxN: {
            TorusRange r = id == SubgroupId::Gamma ? torus_range(SubgroupId::Sigma)
                          : id == SubgroupId::QxM  ? torus_range(SubgroupId::M)
                                                   : torus_range(SubgroupId::N);
            for (const UnitaryTranslation& u : translations(id == SubgroupId::ZxN)) {
                for (std::uint64_t j = 0; j < r.count; ++j) {
                    elems.push_back(make_element(u, j * r.step));
                }
            }
            break;
        }
    }
    return elems;
}

std::vector<GammaElement> GammaGroup::subgroup_generators(SubgroupId id) const {
    std::vector<GammaElement> gens;
    switch (id) {
        case SubgroupId::Q:
        case SubgroupId::Z:
            return enumerate_subgroup(id);
        case SubgroupId::Sigma:
            gens.push_back(make_element(unitary_identity(), 1));
            return gens;
        case SubgroupId::M:
            gens.push_back(make_element(unitary_identity(), torus_order_ / params_.m()));
            return gens;
        case SubgroupId::N:
            gens.push_back(make_element(unitary_identity(), params_.q() - 1));
            return gens;
        case SubgroupId::Gamma:
            gens = enumerate_subgroup(SubgroupId::Q);
            gens.push_back(make_element(unitary_identity(), 1));
            return gens;
        case SubgroupId::QxM:
            gens = enumerate_subgroup(SubgroupId::Q);
            gens.push_back(make_element(unitary_identity(), torus_order_ / params_.m()));
            return gens;
        case SubgroupId::ZxN:
            gens = enumerate_subgroup(SubgroupId::Z);
            gens.push_back(make_element(unitary_identity(), params_.q() - 1));
            return gens;
    }
    throw Error(Errc::BadParameter, "unknown subgroup");
}

namespace {

Key3 gamma_key(const FieldTower& F, const GammaElement& g) {
    return {F.pack(g.u.a), F.pack(g.u.b), g.t.k};
}

using GammaIndex = std::unordered_map<Key3, std::uint32_t, Key3Hash>;

}  // namespace

StructureReport GammaGroup::structure_report(SubgroupId id, std::uint64_t budget) const {
    const FieldTower& F = params_.tower();
    const std::vector<GammaElement> elems = enumerate_subgroup(id, budget);
    const std::vector<GammaElement> gens = subgroup_generators(id);

    StructureReport report;
    report.order = elems.size();

    std::uint64_t exponent = 1;
    for (const GammaElement& e : elems) exponent = std::lcm(exponent, element_order(e));
    report.exponent = exponent;

    std::uint64_t central = 0;
    for (const GammaElement& e : elems) {
        bool commutes = true;
        for (const GammaElement& g : gens) {
            if (!(compose(e, g) == compose(g, e))) {
                commutes = false;
                break;
            }
        }
        if (commutes) ++central;
    }
    report.center_order = central;

    // Derived subgroup: normal closure of the commutators of the generators.
    auto closure = [&](std::vector<GammaElement> seed_gens) {
        GammaIndex index;
        std::vector<GammaElement> members;
        auto insert = [&](const GammaElement& e) {
            auto [it, fresh] = index.emplace(gamma_key(F, e), members.size());
            if (fresh) members.push_back(e);
            return fresh;
        };
        insert(identity());
        for (std::size_t i = 0; i < members.size(); ++i) {
            GammaElement cur = members[i];
            for (const GammaElement& g : seed_gens) insert(compose(cur, g));
        }
        return std::pair(std::move(members), std::move(index));
    };

    std::vector<GammaElement> seeds;
    for (const GammaElement& s1 : gens) {
        for (const GammaElement& s2 : gens) {
            seeds.push_back(compose(compose(inverse(s1), inverse(s2)), compose(s1, s2)));
        }
    }
    auto [derived, derived_index] = closure(seeds);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GammaElement> fresh;
        for (const GammaElement& s : gens) {
            GammaElement sinv = inverse(s);
            for (const GammaElement& d : derived) {
                GammaElement c = compose(compose(sinv, d), s);
                if (!derived_index.count(gamma_key(F, c))) fresh.push_back(c);
            }
        }
        if (!fresh.empty()) {
            seeds.insert(seeds.end(), fresh.begin(), fresh.end());
            std::tie(derived, derived_index) = closure(seeds);
            grew = true;
        }
    }
    report.derived_subgroup_order = derived.size();

    report.is_abelian = report.center_order == report.order;
    report.is_elementary_abelian =
        report.is_abelian && (report.order == 1 || is_prime(report.exponent));
    return report;
}

StructureReport GammaGroup::quotient_structure_report(SubgroupId group, SubgroupId normal,
                                                      std::uint64_t budget) const {
    const FieldTower& F = params_.tower();
    const std::vector<GammaElement> big = enumerate_subgroup(group, budget);
    const std::vector<GammaElement> small = enumerate_subgroup(normal, budget);
    if (big.size() % small.size() != 0) {
        throw Error(Errc::IncompatibleSubgroup, "subgroup order does not divide the group order");
    }

    GammaIndex member;
    for (std::uint32_t i = 0; i < big.size(); ++i) member.emplace(gamma_key(F, big[i]), i);
    for (const GammaElement& h : small) {
        if (!member.count(gamma_key(F, h))) {
            throw Error(Errc::IncompatibleSubgroup, "subgroup is not contained in the group");
        }
    }
    for (const GammaElement& s : subgroup_generators(group)) {
        GammaElement sinv = inverse(s);
        for (const GammaElement& h : small) {
            GammaElement c = compose(compose(sinv, h), s);
            bool in_small = false;
            for (const GammaElement& h2 : small) {
                if (c == h2) {
                    in_small = true;
                    break;
                }
            }
            if (!in_small) {
                throw Error(Errc::IncompatibleSubgroup, "subgroup is not normal in the group");
            }
        }
    }

    // Assign cosets in enumeration order; representatives are first members.
    const std::uint32_t count = static_cast<std::uint32_t>(big.size() / small.size());
    std::vector<std::int32_t> coset_of(big.size(), -1);
    std::vector<std::uint32_t> rep;
    rep.reserve(count);
    for (std::uint32_t i = 0; i < big.size(); ++i) {
        if (coset_of[i] >= 0) continue;
        std::uint32_t c = static_cast<std::uint32_t>(rep.size());
        rep.push_back(i);
        for (const GammaElement& h : small) {
            coset_of[member.at(gamma_key(F, compose(big[i], h)))] = static_cast<std::int32_t>(c);
        }
    }

    std::vector<std::vector<std::uint32_t>> table(count, std::vector<std::uint32_t>(count));
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = 0; j < count; ++j) {
            GammaElement prod = compose(big[rep[i]], big[rep[j]]);
            table[i][j] = static_cast<std::uint32_t>(coset_of[member.at(gamma_key(F, prod))]);
        }
    }

    const std::uint32_t id_coset = static_cast<std::uint32_t>(coset_of[member.at(
        gamma_key(F, identity()))]);
    auto coset_order = [&](std::uint32_t c) {
        std::uint64_t order = 1;
        std::uint32_t acc = c;
        while (acc != id_coset) {
            acc = table[acc][c];
            ++order;
        }
        return order;
    };
    std::vector<std::uint32_t> inv(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = 0; j < count; ++j) {
            if (table[i][j] == id_coset) inv[i] = j;
        }
    }

    StructureReport report;
    report.order = count;
    std::uint64_t exponent = 1;
    for (std::uint32_t c = 0; c < count; ++c) exponent = std::lcm(exponent, coset_order(c));
    report.exponent = exponent;

    std::uint64_t central = 0;
    for (std::uint32_t c = 0; c < count; ++c) {
        bool commutes = true;
        for (std::uint32_t d = 0; d < count && commutes; ++d) commutes = table[c][d] == table[d][c];
        if (commutes) ++central;
    }
    report.center_order = central;

    std::vector<bool> in_derived(count, false);
    std::vector<std::uint32_t> derived;
    auto add_derived = [&](std::uint32_t c) {
        if (!in_derived[c]) {
            in_derived[c] = true;
            derived.push_back(c);
        }
    };
    add_derived(id_coset);
    std::vector<std::uint32_t> commutators;
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = 0; j < count; ++j) {
            commutators.push_back(table[table[inv[i]][inv[j]]][table[i][j]]);
        }
    }
    for (std::uint32_t c : commutators) add_derived(c);
    for (std::size_t i = 0; i < derived.size(); ++i) {
        for (std::uint32_t g : commutators) add_derived(table[derived[i]][g]);
    }
    report.derived_subgroup_order = derived.size();

    report.is_abelian = report.center_order == report.order;
    report.is_elementary_abelian =
        report.is_abelian && (report.order == 1 || is_prime(report.exponent));
    return report;
}

OrbitDecomposition GammaGroup::orbits(SubgroupId id, std::uint64_t budget) const {
    const FieldTower& F = params_.tower();
    const std::vector<CurvePoint> points = enumerate_points(CurveId::Cn, params_, budget);
    const std::vector<GammaElement> gens = subgroup_generators(id);

    auto point_key = [&](const CurvePoint& pt) -> Key3 {
        if (pt.infinite) return {~0ull, ~0ull, ~0ull};
        return {F.pack(pt.x), F.pack(pt.y), F.pack(pt.z)};
    };

    std::unordered_map<Key3, std::uint32_t, Key3Hash> index;
    index.reserve(points.size() * 2);
    for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(point_key(points[i]), i);

    std::vector<bool> visited(points.size(), false);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> found;  // (size, first index)
    for (std::uint32_t start = 0; start < points.size(); ++start) {
        if (visited[start]) continue;
        std::vector<std::uint32_t> stack = {start};
        visited[start] = true;
        std::uint64_t size = 0;
        while (!stack.empty()) {
            std::uint32_t cur = stack.back();
            stack.pop_back();
            ++size;
            for (const GammaElement& g : gens) {
                std::uint32_t next = index.at(point_key(apply_unchecked(g, points[cur])));
                if (!visited[next]) {
                    visited[next] = true;
                    stack.push_back(next);
                }
            }
        }
        found.emplace_back(size, start);
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    OrbitDecomposition decomposition;
    decomposition.orbits.reserve(found.size());
    for (const auto& [size, first] : found) {
        decomposition.orbits.push_back(Orbit{size, points[first]});
    }
    return decomposition;
}

bool GammaGroup::same_gamma_orbit(const CurvePoint& p1, const CurvePoint& p2) const {
    if (p1.infinite || p2.infinite) {
        throw Error(Errc::InfinityInput, "orbit criterion applies to affine points only");
    }
    if (!is_on_curve(CurveId::Cn, p1, params_) || !is_on_curve(CurveId::Cn, p2, params_)) {
        throw Error(Errc::PointNotOnCurve, "orbit criterion applies to points of Cn");
    }
    const FieldTower& F = params_.tower();
    if (p1.z.is_zero() || p2.z.is_zero()) return p1.z.is_zero() && p2.z.is_zero();
    return F.pow(F.mul(p2.z, F.inv(p1.z)), torus_order_) == F.one();
}

bool GammaGroup::semiregular_check(std::uint64_t budget) const {
    const std::vector<CurvePoint> points = enumerate_points(CurveId::Cn, params_, budget);
    const GammaElement id = identity();
    for (const GammaElement& g : enumerate_subgroup(SubgroupId::Q)) {
        if (g == id) continue;
        for (const CurvePoint& pt : points) {
            if (pt.infinite) continue;
            if (apply_unchecked(g, pt) == pt) return false;
        }
    }
    return true;
}

bool GammaGroup::twist_fixes_q(std::uint64_t k) const {
    TorusElement t{k % torus_order_};
    for (const GammaElement& g : enumerate_subgroup(SubgroupId::Q)) {
        if (!(torus_twist(t, g.u) == g.u)) return false;
    }
    return true;
}

bool GammaGroup::twist_fixes_z(std::uint64_t k) const {
    TorusElement t{k % torus_order_};
    for (const GammaElement& g : enumerate_subgroup(SubgroupId::Z)) {
        if (!(torus_twist(t, g.u) == g.u)) return false;
    }
    return true;
}

bool GammaGroup::check_conjugation_law(std::uint64_t samples, std::uint64_t seed) const {
    const std::vector<GammaElement> q_elems = enumerate_subgroup(SubgroupId::Q);
    std::vector<CurvePoint> probes;
    {
        const std::vector<CurvePoint> points = enumerate_points(CurveId::Cn, params_);
        for (std::size_t i = 0; i < 8; ++i) {
            probes.push_back(points[i * (points.size() - 1) / 8]);
        }
    }

    auto check_pair = [&](std::uint64_t k, const GammaElement& x) {
        GammaElement g = make_element(unitary_identity(), k);
        GammaElement lhs = compose(compose(g, x), inverse(g));
        GammaElement rhs = make_element(torus_twist(TorusElement{k}, x.u), 0);
        if (!(lhs == rhs)) return false;
        GammaElement ginv = inverse(g);
        for (const CurvePoint& pt : probes) {
            if (!(apply_unchecked(g, apply_unchecked(x, apply_unchecked(ginv, pt))) ==
                  apply_unchecked(rhs, pt))) {
                return false;
            }
        }
        return true;
    };

    if (samples == 0) {
        for (std::uint64_t k = 0; k < torus_order_; ++k) {
            for (const GammaElement& x : q_elems) {
                if (!check_pair(k, x)) return false;
            }
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (!check_pair(rng() % torus_order_, q_elems[rng() % q_elems.size()])) return false;
    }
    return true;
}

std::vector<std::uint64_t> expected_gamma_orbit_profile(const CurveParams& params) {
    const std::uint64_t q = params.q();
    std::vector<std::uint64_t> profile = {1, q * q * q};
    const std::uint64_t regular = (params.q_pow(params.n() - 1) - 1) / (q - 1);
    const std::uint64_t gamma_order = q * q * q * (params.qn() + 1) * (q - 1);
    for (std::uint64_t i = 0; i < regular; ++i) profile.push_back(gamma_order);
    return profile;
}

}  // namespace maxcurves
