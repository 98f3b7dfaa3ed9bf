#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxcurves/autgroup.hpp"
#include "maxcurves/curves.hpp"
#include "maxcurves/ramification.hpp"

namespace maxcurves {

using Json = nlohmann::ordered_json;

/// Exact rational as "numerator/denominator".
std::string rational_string(const Rational& r);

/// Modulus, primitive element, and subfield layout of the tower.
Json tower_report(const FieldTower& tower);

/// Genus, point count, Hasse-Weil bound, and maximality per curve.  Every
/// row carries ok = (count matches the closed form / the bound).
Json count_report(const CurveParams& params);

/// Structure constants for the distinguished subgroups and quotients of
/// Gamma plus the conjugation-law and twist-characterization checks.
Json group_report(const CurveParams& params,
                  std::uint64_t group_budget = kDefaultGroupBudget);

/// Orbit sizes of Gamma on the points of Cn against the predicted
/// profile, the z-criterion cross-check, and semiregularity of Q.
Json orbit_report(const CurveParams& params,
                  std::uint64_t point_budget = kDefaultPointBudget,
                  std::uint64_t group_budget = kDefaultGroupBudget);

/// Jumps, different exponents, Riemann-Hurwitz status for all covers,
/// valuation tables, and the lifting obstruction.
Json ramification_report(const CurveParams& params);

/// Local series expansions at the origin (precision 0 picks the default
/// 2(q^n + 1)).
Json expand_report(const CurveParams& params, std::uint64_t precision = 0);

/// Conjunction of every boolean named "ok" or ending in "_ok" in the tree.
bool report_ok(const Json& report);

/// Fixed instances exercising the coprime-action generation criterion and
/// the trivial-intersection test on small classical groups (three actions
/// that must pass, one subgroup pair that must pass, one that must fail).
bool coprime_action_instances();

struct CheckResult {
    std::string id;
    bool ok = false;
    double seconds = 0.0;
    std::string detail;
};

/// The full verification suite at one parameter set: field and group
/// theory property corpora plus every report above.
std::vector<CheckResult> run_verification(const CurveParams& params,
                                          std::uint64_t point_budget = kDefaultPointBudget,
                                          std::uint64_t group_budget = kDefaultGroupBudget,
                                          std::uint64_t precision = 0);

Json verify_report(const CurveParams& params, const std::vector<CheckResult>& checks);

/// Flatten a report to "path,value" rows (arrays indexed numerically).
std::string to_csv(const Json& report);

/// Indented "key: value" rendering for terminals.
std::string to_text(const Json& report);

}  // namespace maxcurves
