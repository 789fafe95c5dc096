#ifndef ARBOR_IDEAL_HPP
#define ARBOR_IDEAL_HPP

#include "arbor/node_set.hpp"
#include "arbor/tree.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace arbor {

// Downward-closed family of node subsets: the finite stand-in for an ideal.
// Finite families are deliberately not union closed (a finite family closed
// under pairwise unions is the full power set of its union); completeness is
// modeled by explicit budgets instead.
class family {
public:
    enum class kind { m_special, principal, generated, explicit_members };

    // all X whose longest chain inside X has <= m nodes
    static family make_m_special(const finite_tree& tree, int m);
    // all subsets of u
    static family make_principal(int universe, node_set u);
    // downward closure of the listed generator sets
    static family make_generated(int universe, std::vector<node_set> generators);
    // explicit member list; validated downward closed and containing the
    // empty set (universe must fit in 64 bits)
    static family make_explicit(int universe, const std::vector<node_set>& members);

    bool member(const node_set& x) const;
    int universe() const { return universe_; }
    kind which() const { return kind_; }
    int special_budget() const { return m_; }

    // sorted member masks of an explicit family
    std::vector<std::uint64_t> explicit_masks() const;

private:
    family() = default;

    kind kind_ = kind::principal;
    int universe_ = 0;
    int m_ = 0;
    node_set principal_set_;
    std::vector<node_set> generators_;
    std::vector<node_set> pred_closure_; // pred(x) | {x}, for m_special
    std::unordered_set<std::uint64_t> masks_;
};

// f with f(t) <_T t for every non-root t of the domain; the root, when in
// the domain, is self-assigned.
struct regressive_map {
    node_set domain;
    std::vector<int> assignment; // node -> node; -1 outside the domain
};

bool is_regressive(const finite_tree& tree, const regressive_map& f);

// Diagonal union of a node-indexed collection: union of A_t within cone(t),
// with cone(root) covering the whole tree.
node_set diag_union(const finite_tree& tree, const std::vector<node_set>& sets);

struct diag_membership {
    bool member;
    std::optional<regressive_map> witness;
};

// X in the diagonal union of F, decided via the regressive-function
// characterization: member iff some regressive f on X has every fiber in F.
// Backtracking assigns nodes in decreasing-depth order (ties by index) and
// prunes as soon as a fiber leaves F.
diag_membership in_diag_ideal(const finite_tree& tree, const node_set& x,
                              const family& f);

struct antichain_cover {
    std::vector<node_set> cover;
    int min_count; // longest chain inside X (Mirsky)
};

// Partition X into antichains by chain-depth-within-X levels; the count is
// optimal.
antichain_cover special_cover(const finite_tree& tree, const node_set& x);

// Cover the union of m-special sets sitting above pairwise incomparable
// nodes by <= m antichains, reusing antichain indices across the disjoint
// cones.  x_sets[i] pairs with antichain[i].
std::vector<node_set> merge_special_above_antichain(const finite_tree& tree,
                                                    const std::vector<int>& antichain,
                                                    const std::vector<node_set>& x_sets,
                                                    int m);

// X in the ideal of nonstationary subtrees at budget m: membership in the
// diagonal union of the m-special family.
diag_membership ns_member(const finite_tree& tree, const node_set& x, int m);

// f(t) = maximum of S inside pred(t), or the root when that set is empty;
// every fiber is an antichain.
regressive_map isolated_regressive(const finite_tree& tree, const node_set& s);

// Materialize rounds of the diagonal-union operator applied to F, returning
// the final round as an explicit family.
family diag_iterate(const finite_tree& tree, const family& f, int rounds);

} // namespace arbor

#endif
