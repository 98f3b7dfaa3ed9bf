#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "maxcurves/errors.hpp"

namespace maxcurves {

/// Permutation of {0, ..., degree-1}: perm[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

/// (a then b) composed left to right: result[i] = a[b[i]].
Permutation perm_compose(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& a);
Permutation perm_identity(std::uint32_t degree);

inline constexpr std::uint64_t kDefaultClosureBudget = 1'000'000;

/// A finite group materialised as the set of permutations generated by a
/// list of generators, with multiplication by table lookup.
class FiniteGroupTable {
public:
    /// Breadth-first closure of the generators; throws when the group would
    /// exceed the budget.
    static FiniteGroupTable closure(const std::vector<Permutation>& generators,
                                    std::uint64_t budget = kDefaultClosureBudget);

    std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t identity() const { return identity_; }
    const Permutation& element(std::uint32_t i) const { return elements_[i]; }
    const std::vector<std::uint32_t>& generator_ids() const { return generator_ids_; }

    /// Index of a permutation, or -1 if it is not a member.
    std::int64_t index_of(const Permutation& perm) const;
    std::uint32_t multiply(std::uint32_t i, std::uint32_t j) const;
    std::uint32_t inverse(std::uint32_t i) const;
    std::uint64_t element_order(std::uint32_t i) const;

    std::uint64_t exponent() const;
    std::vector<std::uint32_t> center() const;
    std::vector<std::uint32_t> derived_subgroup() const;
    std::vector<std::uint32_t> centralizer(std::uint32_t g) const;
    /// Elements normalising the given subset (which must be a subgroup).
    std::vector<std::uint32_t> normalizer(const std::vector<std::uint32_t>& subgroup) const;
    /// Subgroup generated by the given element ids.
    std::vector<std::uint32_t> generated_subgroup(const std::vector<std::uint32_t>& seed) const;

private:
    std::uint32_t degree_ = 0;
    std::uint32_t identity_ = 0;
    std::vector<Permutation> elements_;
    std::map<Permutation, std::uint32_t> index_;
    std::vector<std::uint32_t> generator_ids_;
};

/// An action of `group` on {0, ..., domain_size-1}; images[i] is the
/// permutation by which element i acts.
struct GroupAction {
    const FiniteGroupTable* group = nullptr;
    std::uint32_t domain_size = 0;
    std::vector<Permutation> images;
};

/// Checks that the images define a genuine action (identity and
/// compatibility with multiplication).
bool action_is_valid(const GroupAction& action);

/// For an action of a p-group P (containing an elementary abelian subgroup
/// of order p^2) on a p'-group R by automorphisms, verifies that R is
/// generated by the fixed subgroups of the non-trivial elements of P.
bool centralizer_generation_check(const FiniteGroupTable& p_group, const FiniteGroupTable& r_group,
                                  const GroupAction& action);

/// Trivial-intersection check: Q ∩ Q^y = 1 for every y outside the
/// normalizer of Q in the ambient group.
bool trivial_intersection_check(const FiniteGroupTable& ambient,
                                const std::vector<std::uint32_t>& subgroup);

/// Fixed-point counts of every non-identity group element in the action.
std::map<std::uint32_t, std::uint64_t> fixed_point_profile(const GroupAction& action);

}  // namespace maxcurves
