#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "maxcurves/autgroup.hpp"

using namespace maxcurves;

namespace {

using Key = std::array<std::uint64_t, 3>;

Key key_of(const FieldTower& F, const GammaElement& g) {
    return {F.pack(g.u.a), F.pack(g.u.b), g.t.k};
}

}  // namespace

TEST_CASE("translation parameters are validated") {
    CurveParams params = make_params(2, 1, 3);
    GammaGroup G(params);
    const FieldTower& F = params.tower();

    CHECK(G.make_unitary(F.zero(), F.zero()) == G.unitary_identity());
    CHECK(G.make_unitary(F.one(), F.zero()).b == F.zero());  // 1^2 + 1 = 0 = 0^3

    // A generator of F_4^* has nonzero trace, so (w, 0) is not admissible.
    FieldElem w = F.root_of_unity(3);
    CHECK_THROWS_AS(G.make_unitary(w, F.zero()), Error);
    // Parameters outside F_4 are rejected outright.
    CHECK_THROWS_AS(G.make_unitary(F.primitive_element(), F.zero()), Error);
}

TEST_CASE("translation subgroup satisfies the group laws exhaustively") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {3, 3}}) {
        CurveParams params = make_params(p, 1, n);
        GammaGroup G(params);
        const FieldTower& F = params.tower();

        auto q_elems = G.enumerate_subgroup(SubgroupId::Q);
        CHECK(q_elems.size() == params.q() * params.q() * params.q());

        std::set<Key> members;
        for (const GammaElement& g : q_elems) members.insert(key_of(F, g));
        CHECK(members.size() == q_elems.size());

        for (const GammaElement& g1 : q_elems) {
            CHECK(G.compose(g1, G.identity()) == g1);
            CHECK(G.compose(G.identity(), g1) == g1);
            CHECK(G.compose(g1, G.inverse(g1)) == G.identity());
            for (const GammaElement& g2 : q_elems) {
                CHECK(members.count(key_of(F, G.compose(g1, g2))) == 1);
            }
        }

        // Commutators of translations are central translations (b = 0, zero trace).
        auto z_elems = G.enumerate_subgroup(SubgroupId::Z);
        CHECK(z_elems.size() == params.q());
        std::set<Key> central;
        for (const GammaElement& g : z_elems) central.insert(key_of(F, g));
        for (const GammaElement& g1 : q_elems) {
            for (const GammaElement& g2 : q_elems) {
                GammaElement c = G.compose(G.compose(G.inverse(g1), G.inverse(g2)),
                                           G.compose(g1, g2));
                CHECK(central.count(key_of(F, c)) == 1);
            }
        }
    }

    // Non-commuting witness: the translation subgroup is not abelian.
    CurveParams params = make_params(2, 1, 3);
    GammaGroup G(params);
    auto q_elems = G.enumerate_subgroup(SubgroupId::Q);
    bool witness = false;
    for (const GammaElement& g1 : q_elems) {
        for (const GammaElement& g2 : q_elems) {
            if (!(G.compose(g1, g2) == G.compose(g2, g1))) witness = true;
        }
    }
    CHECK(witness);
}

TEST_CASE("subgroup orders") {
    CurveParams params = make_params(2, 1, 5);
    GammaGroup G(params);
    CHECK(G.torus_order() == 33);
    CHECK(G.subgroup_order(SubgroupId::Q) == 8);
    CHECK(G.subgroup_order(SubgroupId::Z) == 2);
    CHECK(G.subgroup_order(SubgroupId::Sigma) == 33);
    CHECK(G.subgroup_order(SubgroupId::M) == 11);
    CHECK(G.subgroup_order(SubgroupId::N) == 33);
    CHECK(G.subgroup_order(SubgroupId::Gamma) == 264);
    CHECK(G.subgroup_order(SubgroupId::QxM) == 88);
    CHECK(G.subgroup_order(SubgroupId::ZxN) == 66);
    for (SubgroupId id : {SubgroupId::Q, SubgroupId::Z, SubgroupId::Sigma, SubgroupId::M,
                          SubgroupId::N, SubgroupId::Gamma, SubgroupId::QxM, SubgroupId::ZxN}) {
        CHECK(G.enumerate_subgroup(id).size() == G.subgroup_order(id));
    }
    CHECK_THROWS_AS(G.enumerate_subgroup(SubgroupId::Gamma, 100), Error);
}

TEST_CASE("torus twist is an automorphism of the translation subgroup") {
    CurveParams params = make_params(3, 1, 3);
    GammaGroup G(params);
    auto q_elems = G.enumerate_subgroup(SubgroupId::Q);

    for (std::uint64_t k : {0ull, 1ull, 5ull, 28ull}) {
        TorusElement t{k};
        std::set<Key> image;
        for (const GammaElement& g : q_elems) {
            UnitaryTranslation tw = G.torus_twist(t, g.u);
            image.insert({params.tower().pack(tw.a), params.tower().pack(tw.b), 0});
            // Homomorphism on a sample of pairs.
        }
        CHECK(image.size() == q_elems.size());
    }
    for (const GammaElement& g1 : q_elems) {
        for (const GammaElement& g2 : q_elems) {
            TorusElement t{11};
            CHECK(G.torus_twist(t, G.compose(g1.u, g2.u)) ==
                  G.compose(G.torus_twist(t, g1.u), G.torus_twist(t, g2.u)));
        }
    }

    // Twist by k is trivial on Q exactly when q^2 - 1 divides k, and fixes
    // the central translations exactly when q - 1 divides k.
    for (std::uint64_t k = 0; k < G.torus_order(); ++k) {
        CHECK(G.twist_fixes_q(k) == (k % (params.q() * params.q() - 1) == 0));
        CHECK(G.twist_fixes_z(k) == (k % (params.q() - 1) == 0));
    }
}

TEST_CASE("conjugation of translations by the torus") {
    CHECK(GammaGroup(make_params(2, 1, 3)).check_conjugation_law());
    CHECK(GammaGroup(make_params(3, 1, 3)).check_conjugation_law());
    CHECK(GammaGroup(make_params(2, 1, 5)).check_conjugation_law(500, 7));
}

TEST_CASE("normal-form composition and inversion") {
    CurveParams params = make_params(2, 1, 3);
    GammaGroup G(params);
    auto gamma = G.enumerate_subgroup(SubgroupId::Gamma);
    REQUIRE(gamma.size() == 72);

    const FieldTower& F = params.tower();
    std::set<Key> members;
    for (const GammaElement& g : gamma) members.insert(key_of(F, g));

    for (const GammaElement& g1 : gamma) {
        CHECK(G.compose(g1, G.inverse(g1)) == G.identity());
        CHECK(G.compose(G.inverse(g1), g1) == G.identity());
        for (const GammaElement& g2 : gamma) {
            CHECK(members.count(key_of(F, G.compose(g1, g2))) == 1);
        }
    }
    // Associativity on a deterministic sample.
    for (std::size_t i = 0; i < gamma.size(); i += 7) {
        for (std::size_t j = 0; j < gamma.size(); j += 11) {
            for (std::size_t k = 0; k < gamma.size(); k += 13) {
                CHECK(G.compose(G.compose(gamma[i], gamma[j]), gamma[k]) ==
                      G.compose(gamma[i], G.compose(gamma[j], gamma[k])));
            }
        }
    }

    CHECK(G.element_order(G.make_element(G.unitary_identity(), 1)) == G.torus_order());
}

TEST_CASE("action on points is a group action preserving the curve") {
    CurveParams params = make_params(2, 1, 3);
    GammaGroup G(params);
    const FieldTower& F = params.tower();
    auto points = enumerate_points(CurveId::Cn, params);
    auto gamma = G.enumerate_subgroup(SubgroupId::Gamma);

    // Translations move the base point (0,0,0) to (a, b, 0).
    for (const GammaElement& g : G.enumerate_subgroup(SubgroupId::Q)) {
        CurvePoint image = G.act(g, affine_point(F.zero(), F.zero(), F.zero()));
        CHECK(image.x == g.u.a);
        CHECK(image.y == g.u.b);
        CHECK(image.z.is_zero());
    }

    for (const GammaElement& g : gamma) {
        CHECK(G.act(g, infinity_point(params)).infinite);
    }
    for (std::size_t i = 0; i < gamma.size(); i += 5) {
        for (const CurvePoint& pt : points) {
            CHECK(is_on_curve(CurveId::Cn, G.act(gamma[i], pt), params));
        }
    }
    // Compatibility: (g1 g2) P = g1 (g2 P) on a sample.
    for (std::size_t i = 0; i < gamma.size(); i += 7) {
        for (std::size_t j = 0; j < gamma.size(); j += 11) {
            for (std::size_t k = 0; k < points.size(); k += 17) {
                CHECK(G.act(G.compose(gamma[i], gamma[j]), points[k]) ==
                      G.act(gamma[i], G.act(gamma[j], points[k])));
            }
        }
    }

    CurvePoint off = affine_point(F.primitive_element(), F.zero(), F.zero());
    CHECK_THROWS_AS(G.act(G.identity(), off), Error);
}

TEST_CASE("structure reports match independent computations") {
    GammaGroup a(make_params(2, 1, 3));
    StructureReport q_report = a.structure_report(SubgroupId::Q);
    CHECK(q_report.order == 8);
    CHECK(q_report.exponent == 4);
    CHECK(q_report.center_order == 2);
    CHECK(q_report.derived_subgroup_order == 2);
    CHECK_FALSE(q_report.is_abelian);

    StructureReport z_report = a.structure_report(SubgroupId::Z);
    CHECK(z_report.order == 2);
    CHECK(z_report.is_elementary_abelian);

    StructureReport sigma_report = a.structure_report(SubgroupId::Sigma);
    CHECK(sigma_report.order == 9);
    CHECK(sigma_report.exponent == 9);
    CHECK(sigma_report.is_abelian);
    CHECK_FALSE(sigma_report.is_elementary_abelian);
    CHECK(sigma_report.derived_subgroup_order == 1);

    StructureReport gamma_report = a.structure_report(SubgroupId::Gamma);
    CHECK(gamma_report.order == 72);
    CHECK(gamma_report.exponent == 36);
    CHECK(gamma_report.center_order == 6);
    CHECK(gamma_report.derived_subgroup_order == 8);

    // Brute-force cross-check of the center on the full element list.
    auto gamma = a.enumerate_subgroup(SubgroupId::Gamma);
    std::uint64_t central = 0;
    for (const GammaElement& g : gamma) {
        bool commutes = true;
        for (const GammaElement& x : gamma) {
            if (!(a.compose(g, x) == a.compose(x, g))) {
                commutes = false;
                break;
            }
        }
        if (commutes) ++central;
    }
    CHECK(central == gamma_report.center_order);

    GammaGroup b(make_params(3, 1, 3));
    StructureReport q3 = b.structure_report(SubgroupId::Q);
    CHECK(q3.order == 27);
    CHECK(q3.exponent == 3);
    CHECK(q3.center_order == 3);
    CHECK(q3.derived_subgroup_order == 3);

    StructureReport gamma3 = b.structure_report(SubgroupId::Gamma);
    CHECK(gamma3.order == 1512);
    CHECK(gamma3.exponent == 168);
    CHECK(gamma3.center_order == 7);
    CHECK(gamma3.derived_subgroup_order == 27);

    GammaGroup c(make_params(2, 1, 5));
    StructureReport gamma5 = c.structure_report(SubgroupId::Gamma);
    CHECK(gamma5.order == 264);
    CHECK(gamma5.exponent == 132);
    CHECK(gamma5.center_order == 22);
    CHECK(gamma5.derived_subgroup_order == 8);
}

TEST_CASE("quotient structure reports") {
    GammaGroup a(make_params(2, 1, 3));
    StructureReport qz = a.quotient_structure_report(SubgroupId::Q, SubgroupId::Z);
    CHECK(qz.order == 4);
    CHECK(qz.exponent == 2);
    CHECK(qz.is_elementary_abelian);

    StructureReport gq = a.quotient_structure_report(SubgroupId::Gamma, SubgroupId::Q);
    CHECK(gq.order == 9);
    CHECK(gq.exponent == 9);
    CHECK(gq.is_abelian);

    GammaGroup b(make_params(3, 1, 3));
    StructureReport qz3 = b.quotient_structure_report(SubgroupId::Q, SubgroupId::Z);
    CHECK(qz3.order == 9);
    CHECK(qz3.exponent == 3);
    CHECK(qz3.is_elementary_abelian);

    CHECK_THROWS_AS(a.quotient_structure_report(SubgroupId::Sigma, SubgroupId::Q), Error);
    try {
        a.quotient_structure_report(SubgroupId::Q, SubgroupId::M);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IncompatibleSubgroup);
    }
}

TEST_CASE("orbit decompositions") {
    CurveParams params = make_params(2, 1, 3);
    GammaGroup G(params);

    OrbitDecomposition gamma_orbits = G.orbits(SubgroupId::Gamma);
    CHECK(gamma_orbits.sizes() == expected_gamma_orbit_profile(params));
    CHECK(gamma_orbits.orbits[0].representative.infinite);
    CHECK(gamma_orbits.orbits[1].representative.z.is_zero());

    OrbitDecomposition q_orbits = G.orbits(SubgroupId::Q);
    auto q_sizes = q_orbits.sizes();
    CHECK(q_sizes.size() == 29);  // infinity + 224/8
    CHECK(q_sizes.front() == 1);
    for (std::size_t i = 1; i < q_sizes.size(); ++i) CHECK(q_sizes[i] == 8);

    // The order-m torus subgroup fixes the z = 0 points and infinity, and
    // acts freely elsewhere.
    OrbitDecomposition m_orbits = G.orbits(SubgroupId::M);
    std::map<std::uint64_t, std::uint64_t> m_hist;
    for (std::uint64_t s : m_orbits.sizes()) ++m_hist[s];
    CHECK(m_hist == std::map<std::uint64_t, std::uint64_t>{{1, 9}, {3, 72}});

    GammaGroup G3(make_params(3, 1, 3));
    CHECK(G3.orbits(SubgroupId::Gamma).sizes() ==
          expected_gamma_orbit_profile(G3.params()));

    CHECK(expected_gamma_orbit_profile(make_params(2, 1, 5)) ==
          std::vector<std::uint64_t>{1, 8, 264, 264, 264, 264, 264, 264, 264, 264, 264, 264,
                                     264, 264, 264, 264, 264});
}

TEST_CASE("orbit membership criterion agrees with the orbit walk") {
    CurveParams params = make_params(2, 1, 3);
    GammaGroup G(params);
    const FieldTower& F = params.tower();
    auto points = enumerate_points(CurveId::Cn, params);

    // Class key: z = 0 in one class, otherwise z^L separates classes.
    std::map<std::uint64_t, std::uint64_t> class_sizes;
    for (const CurvePoint& pt : points) {
        if (pt.infinite) continue;
        std::uint64_t key = pt.z.is_zero() ? ~0ull : F.pack(F.pow(pt.z, G.torus_order()));
        ++class_sizes[key];
    }
    std::vector<std::uint64_t> sizes;
    for (const auto& [key, size] : class_sizes) sizes.push_back(size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::uint64_t>{8, 72, 72, 72});

    // Exhaustive pairwise agreement against the criterion.
    std::map<std::uint64_t, std::uint64_t> class_of;
    std::uint64_t next = 0;
    std::vector<std::uint64_t> labels;
    std::vector<const CurvePoint*> affine;
    for (const CurvePoint& pt : points) {
        if (pt.infinite) continue;
        std::uint64_t key = pt.z.is_zero() ? ~0ull : F.pack(F.pow(pt.z, G.torus_order()));
        if (!class_of.count(key)) class_of[key] = next++;
        labels.push_back(class_of[key]);
        affine.push_back(&pt);
    }
    for (std::size_t i = 0; i < affine.size(); i += 3) {
        for (std::size_t j = 0; j < affine.size(); j += 5) {
            CHECK(G.same_gamma_orbit(*affine[i], *affine[j]) == (labels[i] == labels[j]));
        }
    }

    CHECK_THROWS_AS(G.same_gamma_orbit(infinity_point(params), points[0]), Error);
    try {
        G.same_gamma_orbit(points[0], infinity_point(params));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InfinityInput);
    }
}

TEST_CASE("translations move every affine point") {
    CHECK(GammaGroup(make_params(2, 1, 3)).semiregular_check());
    CHECK(GammaGroup(make_params(3, 1, 3)).semiregular_check());
}
