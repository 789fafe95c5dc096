#ifndef ARBOR_TREE_HPP
#define ARBOR_TREE_HPP

#include "arbor/node_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace arbor {

// Finite rooted tree given by a parent map.  Exactly one entry is `none`
// (the root); every other entry names the node's parent.  Children lists
// and depths are derived eagerly on construction.
class finite_tree {
public:
    static constexpr int none = -1;

    // validates: exactly one root, no cycles, parents in range
    explicit finite_tree(const std::vector<int>& parents);

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int t) const { return parent_[t]; }
    // depth(root) = 0; equals |pred(t)|
    int depth(int t) const { return depth_[t]; }
    const std::vector<int>& children(int t) const { return children_[t]; }
    const std::vector<int>& parents() const { return parent_; }
    // number of levels = longest chain in T
    int height() const { return height_; }

    bool valid_node(int t) const { return t >= 0 && t < size(); }
    void require_node(int t) const;

    // s <_T t: s is a strict ancestor of t
    bool strictly_less(int s, int t) const;
    bool comparable(int s, int t) const { return s == t || strictly_less(s, t) || strictly_less(t, s); }

    node_set pred(int t) const;
    // cone(t) = strict descendants, except cone(root) = the whole tree
    node_set cone(int t) const;

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    int root_ = none;
    int height_ = 0;
};

struct node_query_result {
    node_set pred;
    node_set cone;
    int height; // |pred(t)|
};

node_query_result node_queries(const finite_tree& tree, int t);

struct subset_classification {
    bool is_chain;
    bool is_antichain;
    // finite trees have no limit nodes, so every point of X is isolated
    node_set isolated_points;
};

subset_classification classify_subset(const finite_tree& tree, const node_set& x);

// Finite strict partial order; irreflexivity, transitivity and antisymmetry
// are all checked on construction.
class finite_poset {
public:
    finite_poset(int n, const std::vector<std::pair<int, int>>& less_pairs);

    int size() const { return n_; }
    bool strictly_less(int a, int b) const { return below_[b].contains(a); }
    bool comparable(int a, int b) const {
        return a == b || strictly_less(a, b) || strictly_less(b, a);
    }
    std::vector<std::pair<int, int>> less_pairs() const;

private:
    int n_;
    std::vector<node_set> below_; // below_[b] = { a : a <_P b }
};

// Generators.  Deterministic for fixed parameters and seed.
finite_tree gen_path(int n);
finite_tree gen_complete(int branching, int levels);
// finite stand-in for sigma-Q: strictly increasing sequences over {0..m-1}
// of length <= d, ordered by end-extension, rooted at the empty sequence
finite_tree gen_wq(int m, int d);
finite_tree gen_random(int n, std::uint64_t seed);

// Tree of all chains of P (each finite chain has a maximum), ordered by
// end-extension, with a synthetic root for the empty chain.  max_map sends
// each non-root node to the maximum of its chain (none for the root) and
// is a strict order homomorphism into P.
struct sigma_prime_result {
    finite_tree tree;
    std::vector<int> max_map;
};

sigma_prime_result sigma_prime(const finite_poset& poset);

// Comparability view shared by colorings and chain searches.
struct strict_order {
    int n = 0;
    std::vector<node_set> below; // below[t] = { s : s < t }

    bool less(int s, int t) const { return below[t].contains(s); }
    bool comparable(int s, int t) const { return s != t && (less(s, t) || less(t, s)); }
    // pairs (u,v) with u < v in the order
    std::vector<std::pair<int, int>> comparable_pairs() const;
    bool is_linear() const;
};

strict_order order_view(const finite_tree& tree);
strict_order order_view(const finite_poset& poset);

} // namespace arbor

#endif
