#include "arbor/tree.hpp"

#include "arbor/errors.hpp"
#include "arbor/guards.hpp"
#include "arbor/rng.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace arbor {

finite_tree::finite_tree(const std::vector<int>& parents) : parent_(parents) {
    const int n = size();
    if (n == 0) fail(errc::invalid_argument, "tree needs at least one node");

    for (int t = 0; t < n; ++t) {
        if (parent_[t] == none) {
            if (root_ != none) fail(errc::multiple_roots, "more than one root entry");
            root_ = t;
        } else if (parent_[t] < 0 || parent_[t] >= n) {
            fail(errc::dangling_parent,
                 "parent of node " + std::to_string(t) + " out of range");
        }
    }
    if (root_ == none) fail(errc::multiple_roots, "no root entry");

    // depth by walking parents; a walk longer than n nodes is a cycle
    depth_.assign(n, -1);
    depth_[root_] = 0;
    for (int t = 0; t < n; ++t) {
        int steps = 0;
        int cur = t;
        std::vector<int> trail;
        while (depth_[cur] == -1) {
            trail.push_back(cur);
            cur = parent_[cur];
            if (++steps > n) fail(errc::cycle_detected, "parent links form a cycle");
        }
        int d = depth_[cur];
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) depth_[*it] = ++d;
    }

    children_.assign(n, {});
    for (int t = 0; t < n; ++t)
        if (t != root_) children_[parent_[t]].push_back(t);

    height_ = 0;
    for (int t = 0; t < n; ++t) height_ = std::max(height_, depth_[t] + 1);
}

void finite_tree::require_node(int t) const {
    if (!valid_node(t))
        fail(errc::invalid_node, "node " + std::to_string(t) + " out of range");
}

bool finite_tree::strictly_less(int s, int t) const {
    if (s == t) return false;
    if (depth_[s] >= depth_[t]) return false;
    int cur = t;
    while (depth_[cur] > depth_[s]) cur = parent_[cur];
    return cur == s;
}

node_set finite_tree::pred(int t) const {
    node_set out(size());
    int cur = t;
    while (cur != root_) {
        cur = parent_[cur];
        out.insert(cur);
    }
    return out;
}

node_set finite_tree::cone(int t) const {
    if (t == root_) return node_set::full(size());
    node_set out(size());
    // descendants by BFS
    std::vector<int> stack = {t};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int c : children_[cur]) {
            out.insert(c);
            stack.push_back(c);
        }
    }
    return out;
}

node_query_result node_queries(const finite_tree& tree, int t) {
    tree.require_node(t);
    return {tree.pred(t), tree.cone(t), tree.depth(t)};
}

subset_classification classify_subset(const finite_tree& tree, const node_set& x) {
    auto nodes = x.members();
    bool chain = true;
    bool antichain = true;
    for (std::size_t i = 0; i < nodes.size() && (chain || antichain); ++i)
        for (std::size_t j = i + 1; j < nodes.size() && (chain || antichain); ++j) {
            if (tree.comparable(nodes[i], nodes[j]))
                antichain = false;
            else
                chain = false;
        }
    return {chain, antichain, x};
}

finite_poset::finite_poset(int n, const std::vector<std::pair<int, int>>& less_pairs)
    : n_(n), below_(n, node_set(n)) {
    if (n < 0) fail(errc::invalid_argument, "poset size must be >= 0");
    for (auto [a, b] : less_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(errc::invalid_argument, "poset pair element out of range");
        if (a == b) fail(errc::invalid_argument, "poset relation must be irreflexive");
        below_[b].insert(a);
    }
    for (auto [a, b] : less_pairs)
        if (below_[a].contains(b))
            fail(errc::invalid_argument, "poset relation must be antisymmetric");
    for (int b = 0; b < n; ++b)
        for (int a : below_[b].members())
            if (!below_[a].subset_of(below_[b]))
                fail(errc::invalid_argument, "poset relation must be transitive");
}

std::vector<std::pair<int, int>> finite_poset::less_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < n_; ++b)
        for (int a : below_[b].members()) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

finite_tree gen_path(int n) {
    if (n < 1) fail(errc::param_out_of_range, "path: n must be >= 1");
    std::vector<int> parents(n);
    parents[0] = finite_tree::none;
    for (int i = 1; i < n; ++i) parents[i] = i - 1;
    return finite_tree(parents);
}

finite_tree gen_complete(int branching, int levels) {
    if (branching < 1 || levels < 1)
        fail(errc::param_out_of_range, "complete: branching and levels must be >= 1");
    std::vector<int> parents = {finite_tree::none};
    int level_start = 0;
    int level_size = 1;
    for (int level = 1; level < levels; ++level) {
        int next_start = static_cast<int>(parents.size());
        for (int p = level_start; p < level_start + level_size; ++p)
            for (int b = 0; b < branching; ++b) parents.push_back(p);
        level_start = next_start;
        level_size *= branching;
    }
    return finite_tree(parents);
}

finite_tree gen_wq(int m, int d) {
    if (m < 1 || d < 0) fail(errc::param_out_of_range, "wq: need m >= 1, d >= 0");
    // BFS over strictly increasing sequences, shortest first; a sequence's
    // parent drops its last element, so end-extension is the tree order
    std::vector<int> parents = {finite_tree::none};
    std::vector<int> last = {-1}; // last element of each node's sequence
    std::vector<int> frontier = {0};
    for (int len = 1; len <= d; ++len) {
        std::vector<int> next;
        for (int node : frontier)
            for (int e = last[node] + 1; e < m; ++e) {
                parents.push_back(node);
                last.push_back(e);
                next.push_back(static_cast<int>(parents.size()) - 1);
            }
        frontier = std::move(next);
    }
    return finite_tree(parents);
}

finite_tree gen_random(int n, std::uint64_t seed) {
    if (n < 1) fail(errc::param_out_of_range, "random: n must be >= 1");
    split_mix64 rng(seed);
    std::vector<int> parents(n);
    parents[0] = finite_tree::none;
    for (int i = 1; i < n; ++i) parents[i] = static_cast<int>(rng.below(i));
    return finite_tree(parents);
}

sigma_prime_result sigma_prime(const finite_poset& poset) {
    const int n = poset.size();
    const long cap = search_guard(guard::sigma_prime_chains);

    std::vector<node_set> above(n, node_set(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (poset.strictly_less(a, b)) above[a].insert(b);

    // chains counted from their minimum upward; saturating at the guard
    std::vector<long> count(n, -1);
    auto chains_from = [&](auto&& self, int x) -> long {
        if (count[x] >= 0) return count[x];
        long total = 1;
        for (int y : above[x].members()) {
            total += self(self, y);
            if (total > cap) return count[x] = cap + 1;
        }
        return count[x] = total;
    };
    long total = 1; // synthetic root
    for (int x = 0; x < n; ++x) {
        total += chains_from(chains_from, x);
        if (total > cap)
            fail(errc::too_many_chains,
                 "sigma_prime: chain count exceeds guard " + std::to_string(cap));
    }

    // BFS by chain length; a chain node is determined by (parent, max)
    std::vector<int> parents = {finite_tree::none};
    std::vector<int> max_map = {finite_tree::none};
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int node : frontier) {
            for (int y = 0; y < n; ++y) {
                bool extends = node == 0 ? true : poset.strictly_less(max_map[node], y);
                if (!extends) continue;
                parents.push_back(node);
                max_map.push_back(y);
                next.push_back(static_cast<int>(parents.size()) - 1);
            }
        }
        frontier = std::move(next);
    }
    return {finite_tree(parents), std::move(max_map)};
}

std::vector<std::pair<int, int>> strict_order::comparable_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < n; ++t)
        for (int s : below[t].members()) out.push_back({s, t});
    std::sort(out.begin(), out.end());
    return out;
}

bool strict_order::is_linear() const {
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < t; ++s)
            if (!comparable(s, t)) return false;
    return true;
}

strict_order order_view(const finite_tree& tree) {
    strict_order view;
    view.n = tree.size();
    view.below.reserve(view.n);
    for (int t = 0; t < view.n; ++t) view.below.push_back(tree.pred(t));
    return view;
}

strict_order order_view(const finite_poset& poset) {
    strict_order view;
    view.n = poset.size();
    view.below.assign(view.n, node_set(view.n));
    for (int b = 0; b < view.n; ++b)
        for (int a = 0; a < view.n; ++a)
            if (poset.strictly_less(a, b)) view.below[b].insert(a);
    return view;
}

} // namespace arbor
