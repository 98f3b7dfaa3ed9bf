#include "maxcurves/reports.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "maxcurves/grouptheory.hpp"
#include "maxcurves/numeric.hpp"

namespace maxcurves {

namespace {

Json params_block(const CurveParams& params) {
    return Json{{"p", params.p()},
                {"h", params.tower().h()},
                {"n", params.n()},
                {"q", params.q()},
                {"m", params.m()},
                {"cardinality", params.tower().cardinality()}};
}

std::uint64_t expected_gamma_center(const CurveParams& params) {
    // Z(Gamma) = M for q > 2; at q = 2 the torus fixes Z pointwise, so the
    // center grows to Z x M.
    return params.q() == 2 ? 2 * params.m() : params.m();
}

Json jump_strings(const std::vector<Rational>& jumps) {
    Json out = Json::array();
    for (const Rational& j : jumps) out.push_back(rational_string(j));
    return out;
}

bool check_projection_samples(const CurveParams& params) {
    std::vector<CurvePoint> points = enumerate_points(CurveId::Cn, params);
    std::size_t stride = points.size() > 64 ? points.size() / 64 : 1;
    for (std::size_t i = 0; i < points.size(); i += stride) {
        const CurvePoint& pt = points[i];
        CurvePoint on_xn = project(CurveId::Cn, CurveId::Xn, pt, params);
        CurvePoint on_hq = project(CurveId::Cn, CurveId::Hermitian, pt, params);
        if (!is_on_curve(CurveId::Xn, on_xn, params)) return false;
        if (!is_on_curve(CurveId::Hermitian, on_hq, params)) return false;
        CurvePoint direct = project(CurveId::Cn, CurveId::P1z, pt, params);
        CurvePoint via_xn = project(CurveId::Xn, CurveId::P1z, on_xn, params);
        if (!(direct == via_xn)) return false;
    }
    return true;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

std::string rational_string(const Rational& r) {
    std::ostringstream out;
    out << r.numerator() << "/" << r.denominator();
    return out.str();
}

Json tower_report(const FieldTower& tower) {
    Json report;
    report["p"] = tower.p();
    report["h"] = tower.h();
    report["n"] = tower.n();
    report["degree"] = tower.degree();
    report["cardinality"] = tower.cardinality();
    report["modulus"] = tower.modulus();
    report["primitive_element"] = tower.primitive_element().coeffs;
    Json subfields = Json::array();
    for (std::uint64_t size :
         {tower.q(), tower.q() * tower.q(), checked_pow(tower.q(), tower.n())}) {
        subfields.push_back(
            Json{{"order", size}, {"elements", tower.enumerate_subfield(size).size()}});
    }
    report["subfields"] = subfields;
    return report;
}

Json count_report(const CurveParams& params) {
    Json report;
    report["params"] = params_block(params);
    Json rows = Json::array();
    for (CurveId curve : {CurveId::Hermitian, CurveId::Xn, CurveId::Cn}) {
        CurveStats stats = curve_stats(curve, params);
        std::optional<std::uint64_t> closed = closed_form_count(curve, params);
        Json row;
        row["curve"] = curve_name(curve);
        row["genus"] = stats.genus;
        row["count"] = stats.count;
        if (closed) row["closed_form"] = *closed;
        row["bound"] = stats.weil_bound;
        row["maximal"] = stats.maximal;
        row["ok"] = stats.maximal && (!closed || *closed == stats.count);
        rows.push_back(std::move(row));
    }
    report["curves"] = std::move(rows);
    return report;
}

Json group_report(const CurveParams& params, std::uint64_t group_budget) {
    GammaGroup G(params);
    const std::uint64_t q = params.q();
    const std::uint64_t L = G.torus_order();

    Json report;
    report["params"] = params_block(params);
    report["torus_order"] = L;

    const std::map<SubgroupId, std::uint64_t> expected_orders = {
        {SubgroupId::Q, q * q * q},
        {SubgroupId::Z, q},
        {SubgroupId::Sigma, L},
        {SubgroupId::M, params.m()},
        {SubgroupId::N, params.qn() + 1},
        {SubgroupId::Gamma, q * q * q * L},
        {SubgroupId::QxM, q * q * q * params.m()},
        {SubgroupId::ZxN, q * (params.qn() + 1)},
    };

    Json rows = Json::array();
    StructureReport q_struct;
    for (const auto& [id, expected] : expected_orders) {
        StructureReport s = G.structure_report(id, group_budget);
        if (id == SubgroupId::Q) q_struct = s;
        bool ok = s.order == expected;
        switch (id) {
            case SubgroupId::Q:
                ok = ok && !s.is_abelian && s.exponent == (params.p() == 2 ? 4 : params.p()) &&
                     s.center_order == q && s.derived_subgroup_order == q;
                break;
            case SubgroupId::Z:
                ok = ok && s.is_elementary_abelian && s.exponent == params.p();
                break;
            case SubgroupId::Sigma:
                ok = ok && s.is_abelian && s.exponent == L;  // cyclic
                break;
            case SubgroupId::M:
                ok = ok && s.is_abelian && s.exponent == params.m();
                break;
            case SubgroupId::N:
                ok = ok && s.is_abelian && s.exponent == params.qn() + 1;
                break;
            case SubgroupId::Gamma:
                ok = ok && !s.is_abelian && s.center_order == expected_gamma_center(params) &&
                     s.derived_subgroup_order == q * q * q &&
                     s.exponent == std::lcm(q_struct.exponent, L);
                break;
            case SubgroupId::QxM:
            case SubgroupId::ZxN:
                break;
        }
        rows.push_back(Json{{"name", subgroup_name(id)},
                            {"order", s.order},
                            {"expected_order", expected},
                            {"exponent", s.exponent},
                            {"center_order", s.center_order},
                            {"derived_subgroup_order", s.derived_subgroup_order},
                            {"is_abelian", s.is_abelian},
                            {"is_elementary_abelian", s.is_elementary_abelian},
                            {"ok", ok}});
    }
    report["subgroups"] = std::move(rows);

    StructureReport q_mod_z = G.quotient_structure_report(SubgroupId::Q, SubgroupId::Z);
    StructureReport gamma_mod_q = G.quotient_structure_report(SubgroupId::Gamma, SubgroupId::Q);
    report["quotients"] = Json::array(
        {Json{{"name", "Q/Z"},
              {"order", q_mod_z.order},
              {"exponent", q_mod_z.exponent},
              {"is_elementary_abelian", q_mod_z.is_elementary_abelian},
              {"ok", q_mod_z.order == q * q && q_mod_z.is_elementary_abelian}},
         Json{{"name", "Gamma/Q"},
              {"order", gamma_mod_q.order},
              {"exponent", gamma_mod_q.exponent},
              {"ok", gamma_mod_q.order == L && gamma_mod_q.exponent == L}}});

    // Conjugation law, exhaustively when the group is small enough.
    const std::uint64_t pairs = L * q * q * q;
    const std::uint64_t samples = pairs <= 200'000 ? 0 : 10'000;
    bool conj_ok = G.check_conjugation_law(samples);
    report["conjugation_law"] =
        Json{{"mode", samples == 0 ? "exhaustive" : "sampled"}, {"ok", conj_ok}};

    // A twist fixes all of Q exactly on multiples of q^2 - 1 (the subgroup
    // M) and all of Z exactly on multiples of q - 1 (the subgroup N).
    bool twists_ok = true;
    for (std::uint64_t k = 0; k < L; ++k) {
        twists_ok = twists_ok && G.twist_fixes_q(k) == (k % (q * q - 1) == 0) &&
                    G.twist_fixes_z(k) == (k % (q - 1) == 0);
    }
    report["twist_characterization"] = Json{{"ok", twists_ok}};
    return report;
}

Json orbit_report(const CurveParams& params, std::uint64_t point_budget,
                  std::uint64_t group_budget) {
    GammaGroup G(params);
    Json report;
    report["params"] = params_block(params);

    OrbitDecomposition decomposition = G.orbits(SubgroupId::Gamma, point_budget);
    std::vector<std::uint64_t> sizes = decomposition.sizes();
    std::vector<std::uint64_t> expected = expected_gamma_orbit_profile(params);
    report["orbit_sizes"] = sizes;
    report["expected_sizes"] = expected;
    report["profile_ok"] = sizes == expected;

    // Cross-check the z-coordinate orbit criterion against the walk: the
    // points claimed equivalent to each affine representative must tile
    // the affine points with the walk's orbit sizes.
    std::vector<CurvePoint> points = enumerate_points(CurveId::Cn, params, point_budget);
    bool z_ok = true;
    std::uint64_t covered = 0;
    for (const Orbit& orbit : decomposition.orbits) {
        if (orbit.representative.infinite) {
            covered += 1;
            continue;
        }
        std::uint64_t matched = 0;
        for (const CurvePoint& pt : points) {
            if (!pt.infinite && G.same_gamma_orbit(orbit.representative, pt)) ++matched;
        }
        z_ok = z_ok && matched == orbit.size;
        covered += matched;
    }
    z_ok = z_ok && covered == points.size();
    report["z_criterion_ok"] = z_ok;

    report["semiregular_ok"] = G.semiregular_check(point_budget);
    (void)group_budget;
    return report;
}

Json ramification_report(const CurveParams& params) {
    Json report;
    report["params"] = params_block(params);

    Json covers = Json::array();
    for (CoverId cover : {CoverId::CnOverXn, CoverId::XnOverP1z, CoverId::CnOverP1z,
                          CoverId::HqOverP1y, CoverId::CnOverHq}) {
        CoverDescription desc = cover_description(cover, params);
        Json row;
        row["cover"] = desc.name;
        row["degree"] = desc.degree;
        row["genus_top"] = desc.genus_top;
        row["genus_bottom"] = desc.genus_bottom;
        if (cover == CoverId::CnOverHq) {
            row["tame_points"] = Json{{"count", desc.tame_points[0].count},
                                      {"ramification_index",
                                       desc.tame_points[0].ramification_index}};
        } else {
            RamificationFiltration f = build_filtration(cover, params);
            row["lower_jumps"] = f.lower_jumps();
            row["upper_jumps"] = jump_strings(upper_jumps(f));
            row["different"] = different_exponent(f);
            row["jumps_ok"] = f.lower_jumps() == known_lower_jumps(cover, params);
        }
        row["rh_ok"] = riemann_hurwitz_check(desc);
        covers.push_back(std::move(row));
    }
    report["covers"] = std::move(covers);

    RamificationFiltration big = build_filtration(CoverId::CnOverP1z, params);
    Rational first(static_cast<long long>(big.lower_jumps().front()));
    bool herbrand_ok = phi(first, big) == first;
    for (long long u : {0, 1, 2, 5, 7}) {
        Rational r(u * static_cast<long long>(params.qn() + 1), 7);
        herbrand_ok = herbrand_ok && psi(phi(r, big), big) == r;
    }
    bool quotient_ok = quotient_filtration(big, build_filtration(CoverId::CnOverXn, params)) ==
                       build_filtration(CoverId::XnOverP1z, params);
    report["herbrand"] = Json{{"first_jump_fixed_ok", herbrand_ok},
                              {"quotient_reproduces_Xn_ok", quotient_ok},
                              {"pullback_identity_ok",
                               params.m() * (params.q() + 1) == params.qn() + 1}};

    ValuationTable table = valuation_table(params);
    auto valuations = [](const PointValuations& v) {
        return Json{{"x", v.x}, {"y", v.y}, {"z", v.z}, {"t", v.t}};
    };
    const std::int64_t s = static_cast<std::int64_t>(params.q_pow(params.n() - 3));
    report["valuations"] =
        Json{{"at_zero", valuations(table.at_zero)},
             {"at_infinity", valuations(table.at_infinity)},
             {"uniformizer_ok", table.at_infinity.t == 1},
             {"lemma_ok",
              table.at_zero.y == static_cast<std::int64_t>(params.m()) &&
                  table.at_zero.x == static_cast<std::int64_t>(params.qn() + 1) &&
                  table.at_zero.z == 1 &&
                  table.at_infinity.y == -static_cast<std::int64_t>(params.q() * params.m()) &&
                  table.at_infinity.x == -static_cast<std::int64_t>(params.qn() + 1) &&
                  table.at_infinity.z ==
                      -static_cast<std::int64_t>(params.q() * params.q() * params.q()) &&
                  table.at_infinity.t == s * table.at_infinity.z - table.at_infinity.x}};

    LiftingObstruction lift = lifting_obstruction(params);
    report["lifting"] = Json{{"claimed_zero_order", lift.claimed_zero_order},
                             {"residual", lift.residual},
                             {"lifts_possible", lift.lifts_possible},
                             {"ok", lift.lifts_possible == (params.n() == 3)}};

    HurwitzRatio ratio = hurwitz_ratio(params);
    report["hurwitz"] = Json{{"group_order", ratio.group_order},
                             {"bound", ratio.hurwitz_bound},
                             {"ratio", rational_string(ratio.ratio)}};
    return report;
}

Json expand_report(const CurveParams& params, std::uint64_t precision) {
    const std::uint64_t N = precision == 0 ? 2 * (params.qn() + 1) : precision;
    const FieldTower& F = params.tower();
    const std::uint64_t q = params.q();
    LocalExpansion expansion = local_expand_P0(params, N);

    auto series_json = [&](const LocalSeries& s, std::uint64_t expected_leading) {
        Json terms = Json::array();
        for (const auto& [e, c] : s.coefficients) {
            terms.push_back(Json{{"exponent", e}, {"coefficient", c.coeffs}});
        }
        return Json{{"leading_exponent", s.leading_exponent()},
                    {"expected_leading_exponent", expected_leading},
                    {"terms", std::move(terms)},
                    {"leading_ok", s.leading_exponent() ==
                                       static_cast<std::int64_t>(expected_leading)}};
    };

    LocalSeries zm = series_monomial(F, static_cast<std::int64_t>(params.m()), N);
    LocalSeries y_eq =
        series_sub(F, series_pow(F, expansion.y_series, q * q), expansion.y_series);
    LocalSeries x_eq = series_add(F, series_pow(F, expansion.x_series, q), expansion.x_series);
    LocalSeries x_rhs = series_pow(F, expansion.y_series, q + 1);

    Json report;
    report["params"] = params_block(params);
    report["precision"] = N;
    report["y"] = series_json(expansion.y_series, params.m());
    report["x"] = series_json(expansion.x_series, params.qn() + 1);
    report["y_equation_ok"] = y_eq.coefficients == zm.coefficients;
    report["x_equation_ok"] = x_eq.coefficients == x_rhs.coefficients;
    return report;
}

bool report_ok(const Json& report) {
    if (report.is_object()) {
        for (const auto& [key, value] : report.items()) {
            if (value.is_boolean() && (key == "ok" || key.ends_with("_ok")) &&
                !value.get<bool>()) {
                return false;
            }
            if (!report_ok(value)) return false;
        }
    } else if (report.is_array()) {
        for (const Json& value : report) {
            if (!report_ok(value)) return false;
        }
    }
    return true;
}

namespace {

// Permutation images of group elements on the points of Cn, for the
// bridge between the concrete automorphism group and the generic
// permutation-group engine.
std::vector<Permutation> gamma_point_images(const GammaGroup& G, const CurveParams& params,
                                            const std::vector<GammaElement>& elements,
                                            const std::vector<CurvePoint>& points) {
    const FieldTower& F = params.tower();
    auto key = [&](const CurvePoint& pt) -> std::array<std::uint64_t, 3> {
        if (pt.infinite) return {~0ull, ~0ull, ~0ull};
        return {F.pack(pt.x), F.pack(pt.y), F.pack(pt.z)};
    };
    std::map<std::array<std::uint64_t, 3>, std::uint32_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        index[key(points[i])] = static_cast<std::uint32_t>(i);
    }
    std::vector<Permutation> images;
    for (const GammaElement& g : elements) {
        Permutation perm(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            perm[i] = index.at(key(G.act(g, points[i])));
        }
        images.push_back(std::move(perm));
    }
    return images;
}

}  // namespace

bool coprime_action_instances() {
    auto cycle = [](std::uint32_t degree, std::initializer_list<std::uint32_t> pts) {
        Permutation perm = perm_identity(degree);
        std::vector<std::uint32_t> cyc(pts);
        for (std::size_t i = 0; i < cyc.size(); ++i) perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
        return perm;
    };

    // (Z/2)^2 on (Z/3)^2 by coordinate sign flips.
    FiniteGroupTable q22 = FiniteGroupTable::closure({cycle(4, {0, 1}), cycle(4, {2, 3})});
    FiniteGroupTable r33 = FiniteGroupTable::closure({cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})});
    auto r_id = [&](std::uint32_t i, std::uint32_t j) {
        Permutation perm = perm_identity(6);
        for (std::uint32_t k = 0; k < i; ++k) perm = perm_compose(cycle(6, {0, 1, 2}), perm);
        for (std::uint32_t k = 0; k < j; ++k) perm = perm_compose(cycle(6, {3, 4, 5}), perm);
        return static_cast<std::uint32_t>(r33.index_of(perm));
    };
    auto flip_image = [&](bool first, bool second) {
        Permutation img(r33.size());
        for (std::uint32_t i = 0; i < 3; ++i) {
            for (std::uint32_t j = 0; j < 3; ++j) {
                img[r_id(i, j)] = r_id(first ? (3 - i) % 3 : i, second ? (3 - j) % 3 : j);
            }
        }
        return img;
    };
    GroupAction flips;
    flips.group = &q22;
    flips.domain_size = r33.size();
    flips.images.resize(q22.size());
    std::uint32_t ga = static_cast<std::uint32_t>(q22.index_of(cycle(4, {0, 1})));
    std::uint32_t gb = static_cast<std::uint32_t>(q22.index_of(cycle(4, {2, 3})));
    flips.images[q22.identity()] = flip_image(false, false);
    flips.images[ga] = flip_image(true, false);
    flips.images[gb] = flip_image(false, true);
    flips.images[q22.multiply(ga, gb)] = flip_image(true, true);
    if (!centralizer_generation_check(q22, r33, flips)) return false;

    // Trivial action of the same group on Z/5.
    FiniteGroupTable r5 = FiniteGroupTable::closure({cycle(5, {0, 1, 2, 3, 4})});
    GroupAction trivial;
    trivial.group = &q22;
    trivial.domain_size = r5.size();
    trivial.images.assign(q22.size(), perm_identity(r5.size()));
    if (!centralizer_generation_check(q22, r5, trivial)) return false;

    // (Z/3)^2 scaling the two F_4 coordinates of (Z/2)^4.
    std::vector<Permutation> translations;
    for (std::uint32_t bit = 0; bit < 4; ++bit) {
        Permutation t(16);
        for (std::uint32_t w = 0; w < 16; ++w) t[w] = w ^ (1u << bit);
        translations.push_back(t);
    }
    FiniteGroupTable r16 = FiniteGroupTable::closure(translations);
    FiniteGroupTable q33 = FiniteGroupTable::closure({cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})});
    auto translation_id = [&](std::uint32_t v) {
        Permutation t(16);
        for (std::uint32_t w = 0; w < 16; ++w) t[w] = w ^ v;
        return static_cast<std::uint32_t>(r16.index_of(t));
    };
    auto scale = [](std::uint32_t u, std::uint32_t times) {
        for (std::uint32_t k = 0; k < times; ++k) {
            std::uint32_t lo = u & 1u, hi = (u >> 1) & 1u;
            u = hi | ((lo ^ hi) << 1);
        }
        return u;
    };
    GroupAction scaling;
    scaling.group = &q33;
    scaling.domain_size = r16.size();
    scaling.images.resize(q33.size());
    std::uint32_t ca = static_cast<std::uint32_t>(q33.index_of(cycle(6, {0, 1, 2})));
    std::uint32_t cb = static_cast<std::uint32_t>(q33.index_of(cycle(6, {3, 4, 5})));
    for (std::uint32_t i = 0; i < 3; ++i) {
        for (std::uint32_t j = 0; j < 3; ++j) {
            std::uint32_t g = q33.identity();
            for (std::uint32_t k = 0; k < i; ++k) g = q33.multiply(g, ca);
            for (std::uint32_t k = 0; k < j; ++k) g = q33.multiply(g, cb);
            Permutation img(r16.size());
            for (std::uint32_t v = 0; v < 16; ++v) {
                img[translation_id(v)] =
                    translation_id(scale(v & 3u, i) | (scale(v >> 2, j) << 2));
            }
            scaling.images[g] = std::move(img);
        }
    }
    if (!centralizer_generation_check(q33, r16, scaling)) return false;

    // Trivial-intersection pair: true in A5, false in S4.
    FiniteGroupTable a5 =
        FiniteGroupTable::closure({cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})});
    std::vector<std::uint32_t> v4 = a5.generated_subgroup(
        {static_cast<std::uint32_t>(a5.index_of(
             perm_compose(cycle(5, {0, 1}), cycle(5, {2, 3})))),
         static_cast<std::uint32_t>(a5.index_of(
             perm_compose(cycle(5, {0, 2}), cycle(5, {1, 3}))))});
    if (!trivial_intersection_check(a5, v4)) return false;
    FiniteGroupTable s4 = FiniteGroupTable::closure({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})});
    std::vector<std::uint32_t> d8 = s4.generated_subgroup(
        {static_cast<std::uint32_t>(s4.index_of(cycle(4, {0, 1, 2, 3}))),
         static_cast<std::uint32_t>(s4.index_of(cycle(4, {0, 2})))});
    return !trivial_intersection_check(s4, d8);
}

std::vector<CheckResult> run_verification(const CurveParams& params, std::uint64_t point_budget,
                                          std::uint64_t group_budget, std::uint64_t precision) {
    std::vector<CheckResult> results;
    auto run = [&](const std::string& id, auto&& body) {
        CheckResult result;
        result.id = id;
        Timer timer;
        try {
            result.ok = body(result);
        } catch (const std::exception& ex) {
            result.ok = false;
            result.detail = ex.what();
        }
        result.seconds = timer.seconds();
        results.push_back(std::move(result));
    };

    const FieldTower& F = params.tower();
    const std::uint64_t Q = F.cardinality();

    run("field/tower-determinism", [&](CheckResult&) {
        FieldTower rebuilt(F.p(), F.h(), F.n());
        bool ok = rebuilt.modulus() == F.modulus() &&
                  rebuilt.primitive_element() == F.primitive_element();
        for (const auto& [r, e] : factorize(Q - 1)) {
            ok = ok && !F.pow(F.primitive_element(), (Q - 1) / r).is_zero() &&
                 !(F.pow(F.primitive_element(), (Q - 1) / r) == F.one());
        }
        for (std::uint64_t k = 0; k < Q; k += Q > 512 ? 97 : 1) {
            ok = ok && F.index_of(F.element_at(k)) == k;
        }
        return ok;
    });

    run("field/solver-partitions", [&](CheckResult&) {
        std::uint64_t trace_total = 0, frob_total = 0, kummer_solvable = 0;
        for (std::uint64_t k = 0; k < Q; ++k) {
            FieldElem c = F.element_at(k);
            trace_total += F.additive_solution_count(AdditiveKind::TraceToQ, c);
            frob_total += F.additive_solution_count(AdditiveKind::FrobeniusMinusIdentityQ2, c);
            if (!c.is_zero() && F.kummer_solution_count(params.m(), c) > 0) ++kummer_solvable;
        }
        return trace_total == Q && frob_total == Q &&
               kummer_solvable == (Q - 1) / params.m();
    });

    run("curves/counts", [&](CheckResult& r) {
        Json report = count_report(params);
        r.detail = report["curves"].dump();
        return report_ok(report);
    });

    run("curves/projections", [&](CheckResult&) { return check_projection_samples(params); });

    run("group/structure", [&](CheckResult& r) {
        Json report = group_report(params, group_budget);
        if (!report_ok(report)) {
            r.detail = report.dump();
            return false;
        }
        return true;
    });

    run("orbits/profile", [&](CheckResult& r) {
        Json report = orbit_report(params, point_budget, group_budget);
        r.detail = report["orbit_sizes"].dump();
        return report_ok(report);
    });

    run("ramification/reports", [&](CheckResult& r) {
        Json report = ramification_report(params);
        if (!report_ok(report)) {
            r.detail = report.dump();
            return false;
        }
        return true;
    });

    run("ramification/rh-mutation", [&](CheckResult&) {
        CoverDescription desc = cover_description(CoverId::CnOverP1z, params);
        bool ok = riemann_hurwitz_check(desc);
        for (std::uint64_t wrong :
             {params.q() * params.q(), static_cast<std::uint64_t>(1)}) {
            CoverDescription mutated = desc;
            mutated.wild_points[0].segments[1].group_order = wrong;
            ok = ok && !riemann_hurwitz_check(mutated);
        }
        return ok;
    });

    run("ramification/series", [&](CheckResult& r) {
        Json report = expand_report(params, precision);
        r.detail = report["y"]["terms"].dump();
        return report_ok(report);
    });

    run("ramification/lifting-grid", [&](CheckResult&) {
        for (std::uint64_t p : {2, 3, 5}) {
            for (std::uint32_t n : {3, 5, 7, 9}) {
                if (lifting_obstruction(p, 1, n).lifts_possible != (n == 3)) return false;
            }
        }
        return true;
    });

    run("grouptheory/permutation-bridge", [&](CheckResult& r) {
        GammaGroup G(params);
        std::vector<CurvePoint> points = enumerate_points(CurveId::Cn, params, point_budget);
        const std::uint64_t gamma_order = G.subgroup_order(SubgroupId::Gamma);
        std::vector<GammaElement> q_elements = G.enumerate_subgroup(SubgroupId::Q);
        std::vector<Permutation> q_images = gamma_point_images(G, params, q_elements, points);

        // Every nontrivial translation fixes exactly the point at infinity.
        FiniteGroupTable q_table = FiniteGroupTable::closure(q_images);
        GroupAction action;
        action.group = &q_table;
        action.domain_size = static_cast<std::uint32_t>(points.size());
        action.images.resize(q_table.size());
        for (std::uint32_t i = 0; i < q_table.size(); ++i) action.images[i] = q_table.element(i);
        bool ok = q_table.size() == q_elements.size();
        for (const auto& [g, fixed] : fixed_point_profile(action)) ok = ok && fixed == 1;

        if (gamma_order * points.size() <= 12'000'000) {
            std::vector<GammaElement> gens = q_elements;
            gens.push_back(G.make_element(G.unitary_identity(), 1));
            FiniteGroupTable gamma_image =
                FiniteGroupTable::closure(gamma_point_images(G, params, gens, points));
            ok = ok && gamma_image.size() == gamma_order;
        } else {
            r.detail = "full closure skipped: domain too large";
        }
        return ok;
    });

    run("grouptheory/coprime-instances", [&](CheckResult&) { return coprime_action_instances(); });

    return results;
}

Json verify_report(const CurveParams& params, const std::vector<CheckResult>& checks) {
    Json report;
    report["params"] = params_block(params);
    Json rows = Json::array();
    bool all_ok = true;
    for (const CheckResult& check : checks) {
        Json row;
        row["id"] = check.id;
        row["ok"] = check.ok;
        row["seconds"] = check.seconds;
        if (!check.detail.empty()) row["detail"] = check.detail;
        rows.push_back(std::move(row));
        all_ok = all_ok && check.ok;
    }
    report["checks"] = std::move(rows);
    report["all_ok"] = all_ok;
    return report;
}

namespace {

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_string(const Json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

void flatten(const Json& node, const std::string& path, std::string& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, path.empty() ? key : path + "." + key, out);
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const Json& value : node) {
            flatten(value, path + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out += csv_escape(path);
        out += ',';
        out += csv_escape(scalar_string(node));
        out += '\n';
    }
}

bool is_scalar_array(const Json& node) {
    if (!node.is_array()) return false;
    for (const Json& value : node) {
        if (value.is_object() || value.is_array()) return false;
    }
    return true;
}

void render_text(const Json& node, int indent, std::string& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            out += pad + key + ":\n";
            render_text(value, indent + 1, out);
        } else if (is_scalar_array(value)) {
            out += pad + key + ": [";
            bool first = true;
            for (const Json& v : value) {
                if (!first) out += ", ";
                out += scalar_string(v);
                first = false;
            }
            out += "]\n";
        } else if (value.is_array()) {
            out += pad + key + ":\n";
            std::size_t i = 0;
            for (const Json& v : value) {
                out += pad + "  - [" + std::to_string(i++) + "]\n";
                render_text(v, indent + 2, out);
            }
        } else {
            out += pad + key + ": " + scalar_string(value) + "\n";
        }
    }
}

}  // namespace

std::string to_csv(const Json& report) {
    std::string out = "key,value\n";
    flatten(report, "", out);
    return out;
}

std::string to_text(const Json& report) {
    std::string out;
    render_text(report, 0, out);
    return out;
}

}  // namespace maxcurves
