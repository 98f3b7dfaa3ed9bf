#include "maxcurves/grouptheory.hpp"

#include <algorithm>
#include <numeric>

#include "maxcurves/numeric.hpp"

namespace maxcurves {

Permutation perm_compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

Permutation perm_inverse(const Permutation& a) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
    return out;
}

Permutation perm_identity(std::uint32_t degree) {
    Permutation out(degree);
    std::iota(out.begin(), out.end(), 0u);
    return out;
}

FiniteGroupTable FiniteGroupTable::closure(const std::vector<Permutation>& generators,
                                           std::uint64_t budget) {
    FiniteGroupTable table;
    table.degree_ = generators.empty() ? 0 : static_cast<std::uint32_t>(generators[0].size());
    for (const Permutation& g : generators) {
        if (g.size() != table.degree_) {
            throw Error(Errc::BadParameter, "generators act on different sets");
        }
        std::vector<bool> seen(g.size(), false);
        for (std::uint32_t v : g) {
            if (v >= g.size() || seen[v]) {
                throw Error(Errc::BadParameter, "generator is not a bijection");
            }
            seen[v] = true;
        }
    }

    auto insert = [&](Permutation perm) -> std::uint32_t {
        auto it = table.index_.find(perm);
        if (it != table.index_.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(table.elements_.size());
        if (id >= budget) throw Error(Errc::BudgetExceeded, "group closure exceeds the budget");
        table.index_.emplace(perm, id);
        table.elements_.push_back(std::move(perm));
        return id;
    };

    insert(perm_identity(table.degree_));
    for (std::size_t i = 0; i < table.elements_.size(); ++i) {
        for (const Permutation& g : generators) {
            insert(perm_compose(table.elements_[i], g));
        }
    }
    table.identity_ = 0;
    for (const Permutation& g : generators) {
        table.generator_ids_.push_back(table.index_.at(g));
    }
    return table;
}

std::int64_t FiniteGroupTable::index_of(const Permutation& perm) const {
    auto it = index_.find(perm);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint32_t FiniteGroupTable::multiply(std::uint32_t i, std::uint32_t j) const {
    return index_.at(perm_compose(elements_[i], elements_[j]));
}

std::uint32_t FiniteGroupTable::inverse(std::uint32_t i) const {
    return index_.at(perm_inverse(elements_[i]));
}

std::uint64_t FiniteGroupTable::element_order(std::uint32_t i) const {
    std::uint64_t order = 1;
    std::uint32_t acc = i;
    while (acc != identity_) {
        acc = multiply(acc, i);
        ++order;
    }
    return order;
}

std::uint64_t FiniteGroupTable::exponent() const {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < size(); ++i) result = std::lcm(result, element_order(i));
    return result;
}

std::vector<std::uint32_t> FiniteGroupTable::center() const {
    std::vector<std::uint32_t> central;
    for (std::uint32_t g = 0; g < size(); ++g) {
        bool commutes = true;
        for (std::uint32_t x = 0; x < size() && commutes; ++x) {
            commutes = multiply(g, x) == multiply(x, g);
        }
        if (commutes) central.push_back(g);
    }
    return central;
}

std::vector<std::uint32_t> FiniteGroupTable::generated_subgroup(
    const std::vector<std::uint32_t>& seed) const {
    std::vector<bool> member(size(), false);
    std::vector<std::uint32_t> order_added = {identity_};
    member[identity_] = true;
    for (std::size_t i = 0; i < order_added.size(); ++i) {
        for (std::uint32_t s : seed) {
            std::uint32_t next = multiply(order_added[i], s);
            if (!member[next]) {
                member[next] = true;
                order_added.push_back(next);
            }
        }
    }
    std::sort(order_added.begin(), order_added.end());
    return order_added;
}

std::vector<std::uint32_t> FiniteGroupTable::derived_subgroup() const {
    std::vector<std::uint32_t> commutators;
    for (std::uint32_t i = 0; i < size(); ++i) {
        std::uint32_t iinv = inverse(i);
        for (std::uint32_t j = 0; j < size(); ++j) {
            commutators.push_back(multiply(multiply(iinv, inverse(j)), multiply(i, j)));
        }
    }
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
    return generated_subgroup(commutators);
}

std::vector<std::uint32_t> FiniteGroupTable::centralizer(std::uint32_t g) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < size(); ++x) {
        if (multiply(g, x) == multiply(x, g)) out.push_back(x);
    }
    return out;
}

std::vector<std::uint32_t> FiniteGroupTable::normalizer(
    const std::vector<std::uint32_t>& subgroup) const {
    std::vector<bool> member(size(), false);
    for (std::uint32_t h : subgroup) member[h] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < size(); ++g) {
        std::uint32_t ginv = inverse(g);
        bool normalizes = true;
        for (std::uint32_t h : subgroup) {
            if (!member[multiply(multiply(ginv, h), g)]) {
                normalizes = false;
                break;
            }
        }
        if (normalizes) out.push_back(g);
    }
    return out;
}

bool action_is_valid(const GroupAction& action) {
    if (action.group == nullptr || action.images.size() != action.group->size()) return false;
    const FiniteGroupTable& G = *action.group;
    for (const Permutation& img : action.images) {
        if (img.size() != action.domain_size) return false;
    }
    if (action.images[G.identity()] != perm_identity(action.domain_size)) return false;
    for (std::uint32_t i = 0; i < G.size(); ++i) {
        for (std::uint32_t j = 0; j < G.size(); ++j) {
            if (action.images[G.multiply(i, j)] !=
                perm_compose(action.images[i], action.images[j])) {
                return false;
            }
        }
    }
    return true;
}

bool centralizer_generation_check(const FiniteGroupTable& p_group, const FiniteGroupTable& r_group,
                                  const GroupAction& action) {
    auto factors = factorize(p_group.size());
    if (factors.size() != 1) {
        throw Error(Errc::HypothesisViolated, "acting group is not a p-group");
    }
    const std::uint64_t p = factors[0].first;
    if (r_group.size() % p == 0) {
        throw Error(Errc::HypothesisViolated, "p divides the order of the acted-on group");
    }

    // The acting group must contain an elementary abelian subgroup of order
    // p^2 (rules out the cyclic and generalized-quaternion cases).
    bool has_rank_two = false;
    for (std::uint32_t a = 0; a < p_group.size() && !has_rank_two; ++a) {
        if (p_group.element_order(a) != p) continue;
        std::vector<std::uint32_t> cyclic = p_group.generated_subgroup({a});
        for (std::uint32_t b = 0; b < p_group.size() && !has_rank_two; ++b) {
            if (p_group.element_order(b) != p) continue;
            if (std::binary_search(cyclic.begin(), cyclic.end(), b)) continue;
            if (p_group.multiply(a, b) == p_group.multiply(b, a)) has_rank_two = true;
        }
    }
    if (!has_rank_two) {
        throw Error(Errc::HypothesisViolated,
                    "acting group has no elementary abelian subgroup of order p^2");
    }

    if (action.group != &p_group || action.domain_size != r_group.size() ||
        !action_is_valid(action)) {
        throw Error(Errc::HypothesisViolated, "images do not define an action on the group");
    }
    for (const Permutation& img : action.images) {
        for (std::uint32_t r1 = 0; r1 < r_group.size(); ++r1) {
            for (std::uint32_t r2 = 0; r2 < r_group.size(); ++r2) {
                if (img[r_group.multiply(r1, r2)] != r_group.multiply(img[r1], img[r2])) {
                    throw Error(Errc::HypothesisViolated, "action is not by automorphisms");
                }
            }
        }
    }

    std::vector<std::uint32_t> seed;
    for (std::uint32_t h = 0; h < p_group.size(); ++h) {
        if (h == p_group.identity()) continue;
        for (std::uint32_t r = 0; r < r_group.size(); ++r) {
            if (action.images[h][r] == r) seed.push_back(r);
        }
    }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    return r_group.generated_subgroup(seed).size() == r_group.size();
}

bool trivial_intersection_check(const FiniteGroupTable& ambient,
                                const std::vector<std::uint32_t>& subgroup) {
    std::vector<std::uint32_t> closed = ambient.generated_subgroup(subgroup);
    std::vector<std::uint32_t> sorted = subgroup;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (closed != sorted) {
        throw Error(Errc::BadParameter, "given element set is not a subgroup");
    }

    std::vector<bool> member(ambient.size(), false);
    for (std::uint32_t h : sorted) member[h] = true;
    std::vector<bool> normalizes(ambient.size(), false);
    for (std::uint32_t g : ambient.normalizer(sorted)) normalizes[g] = true;

    for (std::uint32_t y = 0; y < ambient.size(); ++y) {
        if (normalizes[y]) continue;
        std::uint32_t yinv = ambient.inverse(y);
        for (std::uint32_t h : sorted) {
            if (h == ambient.identity()) continue;
            if (member[ambient.multiply(ambient.multiply(yinv, h), y)]) return false;
        }
    }
    return true;
}

std::map<std::uint32_t, std::uint64_t> fixed_point_profile(const GroupAction& action) {
    if (!action_is_valid(action)) {
        throw Error(Errc::BadParameter, "images do not define an action");
    }
    std::map<std::uint32_t, std::uint64_t> profile;
    for (std::uint32_t g = 0; g < action.group->size(); ++g) {
        if (g == action.group->identity()) continue;
        std::uint64_t fixed = 0;
        for (std::uint32_t i = 0; i < action.domain_size; ++i) {
            if (action.images[g][i] == i) ++fixed;
        }
        profile[g] = fixed;
    }
    return profile;
}

}  // namespace maxcurves
