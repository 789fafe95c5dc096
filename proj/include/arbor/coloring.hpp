#ifndef ARBOR_COLORING_HPP
#define ARBOR_COLORING_HPP

#include "arbor/node_set.hpp"
#include "arbor/tree.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace arbor {

// Total map from the comparable pairs of an ambient order to colors
// 0..k-1, symmetric in the pair.  Incomparable pairs are undefined and
// querying them is an error: a silent default would corrupt homogeneity
// search.
class pair_coloring {
public:
    // assign(u, v) is called once per comparable pair with u < v in the order
    pair_coloring(strict_order order, int k,
                  const std::function<int(int, int)>& assign);

    int colors() const { return k_; }
    const strict_order& order() const { return order_; }

    // color of the comparable pair {u, v}; incomparable_pair otherwise
    int color(int u, int v) const;
    bool has_pair(int u, int v) const;

    std::vector<std::pair<int, int>> pairs() const { return order_.comparable_pairs(); }

private:
    strict_order order_;
    int k_;
    std::vector<signed char> value_; // n*n, -1 where undefined
};

// c_chi(t) = { s < t : c{s,t} = chi }; the slices over chi partition pred(t).
node_set c_chi(const pair_coloring& coloring, int t, int chi);

// node -> label with comparable nodes receiving distinct labels
struct specializing_map {
    std::vector<int> label;
};

// f(t) = depth(t): the minimum-label-count specializing map (label count
// equals the tree height, which is optimal by the longest-chain bound).
specializing_map depth_specializing_map(const finite_tree& tree);

int distinct_label_count(const specializing_map& f);

// 2-coloring: pair x <_T y gets 0 when f(x) < f(y), 1 when f(x) > f(y).
// Every 0-homogeneous chain ascends through labels and every 1-homogeneous
// chain descends, so both are bounded by the number of distinct labels.
// not_specializing when a comparable pair shares a label.
pair_coloring galvin_coloring(const finite_tree& tree, const specializing_map& f);

// 2-coloring of path(n) from a second linear order: pair i < j gets 0 when
// second_order(i) < second_order(j).  0-homogeneous sets are exactly the
// increasing subsequences of the permutation, 1-homogeneous the decreasing
// ones.
pair_coloring sierpinski_coloring(int n, const std::vector<int>& second_order);

// uniform color per comparable pair; deterministic for a fixed seed
pair_coloring random_coloring(const strict_order& order, int k, std::uint64_t seed);

pair_coloring constant_coloring(const strict_order& order, int k, int color);

} // namespace arbor

#endif
