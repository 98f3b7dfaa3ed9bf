#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxcurves/errors.hpp"

namespace maxcurves {

using Bigint = boost::multiprecision::cpp_int;

/// Element of the tower field F_p[x]/(modulus), stored as coefficients in
/// ascending powers of x.  coeffs.size() always equals the tower degree.
struct FieldElem {
    std::vector<std::uint32_t> coeffs;

    bool operator==(const FieldElem&) const = default;
    bool is_zero() const;
};

bool lex_less(const FieldElem& a, const FieldElem& b);

/// Which Artin-Schreier-type equation solve_additive targets.
enum class AdditiveKind {
    TraceToQ,       // x^q + x = c
    FrobeniusMinusIdentityQ2,  // y^(q^2) - y = c
};

/// The field tower F_p < F_q < F_{q^2} < F_{q^n} < F_{q^{2n}} with q = p^h
/// and n odd, realised as the single quotient ring F_p[x]/(f) of degree 2nh.
/// Construction is deterministic: f is the lexicographically smallest monic
/// irreducible polynomial of that degree (coefficients compared from the
/// constant term up), and the stored primitive element is the lex-smallest
/// generator of the multiplicative group.
class FieldTower {
public:
    FieldTower(std::uint64_t p, std::uint32_t h, std::uint32_t n);

    std::uint64_t p() const { return p_; }
    std::uint32_t h() const { return h_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t q() const { return q_; }
    std::uint32_t degree() const { return degree_; }
    /// Cardinality of the full field F_{q^{2n}}.
    std::uint64_t cardinality() const { return cardinality_; }

    /// Non-leading coefficients of the monic modulus, ascending, length degree().
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldElem& primitive_element() const { return primitive_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    /// k-th element in lexicographic order, k in [0, cardinality()).
    FieldElem element_at(std::uint64_t index) const;
    /// Inverse of element_at.
    std::uint64_t index_of(const FieldElem& e) const;
    /// Bijection onto [0, cardinality()) used for table indexing: sum of
    /// coeffs[i] * p^i.
    std::uint64_t pack(const FieldElem& e) const;
    FieldElem unpack(std::uint64_t code) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& base, const Bigint& exponent) const;
    FieldElem pow(const FieldElem& base, std::uint64_t exponent) const;
    /// p^k-power Frobenius.
    FieldElem frobenius(const FieldElem& e, std::uint32_t k) const;

    /// Membership in the subfield of order s; s must be a power of p whose
    /// degree divides degree().
    bool in_subfield(const FieldElem& e, std::uint64_t s) const;
    /// All s elements of the subfield of order s (zero first, then powers of
    /// the subfield generator).
    std::vector<FieldElem> enumerate_subfield(std::uint64_t s) const;
    /// Trace from F_{q^2} to F_q, i.e. e^q + e; e must lie in F_{q^2}.
    FieldElem trace_subfield(const FieldElem& e) const;

    /// All solutions of the additive equation for the given right-hand side,
    /// in lex order.  Empty when unsolvable; otherwise q solutions for
    /// TraceToQ and q^2 for FrobeniusMinusIdentityQ2.
    std::vector<FieldElem> solve_additive(AdditiveKind kind, const FieldElem& rhs) const;
    /// Solution count only (0 or the kernel size); avoids materialising roots.
    std::uint64_t additive_solution_count(AdditiveKind kind, const FieldElem& rhs) const;

    /// All solutions of z^m = c in lex-of-pack order; m must divide
    /// cardinality()-1.  Solvable for c != 0 iff c^((Q-1)/m) = 1.
    std::vector<FieldElem> solve_kummer(std::uint64_t m, const FieldElem& c) const;
    std::uint64_t kummer_solution_count(std::uint64_t m, const FieldElem& c) const;

    /// Element of exact multiplicative order k; k must divide cardinality()-1.
    FieldElem root_of_unity(std::uint64_t k) const;

    /// Discrete log base the primitive element; input must be nonzero.
    std::uint64_t discrete_log(const FieldElem& e) const;

private:
    struct AdditiveSystem {
        // Row echelon data for the F_p-linear operator of the equation.
        std::vector<std::vector<std::uint32_t>> rref;     // degree x degree
        std::vector<std::vector<std::uint32_t>> transform;  // rref = transform * A
        std::vector<int> pivot_col;                       // per rref row, -1 if zero row
        std::vector<FieldElem> kernel;                    // basis of solutions of A v = 0
    };

    FieldElem reduce_product(std::vector<std::uint64_t>& buffer) const;
    AdditiveSystem build_additive_system(AdditiveKind kind) const;
    const AdditiveSystem& additive_system(AdditiveKind kind) const;
    void ensure_dlog_table() const;

    std::uint64_t p_;
    std::uint32_t h_;
    std::uint32_t n_;
    std::uint64_t q_;
    std::uint32_t degree_;
    std::uint64_t cardinality_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::vector<std::uint32_t>> reduction_;  // x^k mod f for k in [degree, 2*degree-2]
    FieldElem primitive_;
    AdditiveSystem trace_system_;
    AdditiveSystem frob_system_;

    mutable std::once_flag dlog_once_;
    mutable std::vector<std::uint32_t> dlog_;
};

}  // namespace maxcurves
