#include "arbor/ideal.hpp"

#include "arbor/errors.hpp"
#include "arbor/guards.hpp"

#include <algorithm>
#include <string>

namespace arbor {

family family::make_m_special(const finite_tree& tree, int m) {
    if (m < 0) fail(errc::param_out_of_range, "m_special: m must be >= 0");
    family f;
    f.kind_ = kind::m_special;
    f.universe_ = tree.size();
    f.m_ = m;
    f.pred_closure_.reserve(tree.size());
    for (int t = 0; t < tree.size(); ++t) {
        node_set closure = tree.pred(t);
        closure.insert(t);
        f.pred_closure_.push_back(std::move(closure));
    }
    return f;
}

family family::make_principal(int universe, node_set u) {
    family f;
    f.kind_ = kind::principal;
    f.universe_ = universe;
    f.principal_set_ = std::move(u);
    return f;
}

family family::make_generated(int universe, std::vector<node_set> generators) {
    family f;
    f.kind_ = kind::generated;
    f.universe_ = universe;
    f.generators_ = std::move(generators);
    return f;
}

family family::make_explicit(int universe, const std::vector<node_set>& members) {
    if (universe > 64)
        fail(errc::ambient_too_large, "explicit family: universe must be <= 64");
    family f;
    f.kind_ = kind::explicit_members;
    f.universe_ = universe;
    for (const auto& m : members) f.masks_.insert(m.mask64());
    if (!f.masks_.count(0))
        fail(errc::invalid_argument, "family must contain the empty set");
    // downward closure: removing any one element stays inside
    for (std::uint64_t mask : f.masks_)
        for (int e = 0; e < universe; ++e)
            if ((mask >> e) & 1u)
                if (!f.masks_.count(mask & ~(1ULL << e)))
                    fail(errc::invalid_argument, "family is not downward closed");
    return f;
}

bool family::member(const node_set& x) const {
    switch (kind_) {
    case kind::m_special: {
        // longest chain inside x ends at some node and fills its pred path
        for (int t : x.members())
            if ((x & pred_closure_[t]).size() > m_) return false;
        return true;
    }
    case kind::principal:
        return x.subset_of(principal_set_);
    case kind::generated: {
        if (x.empty()) return true;
        for (const auto& g : generators_)
            if (x.subset_of(g)) return true;
        return false;
    }
    case kind::explicit_members:
        return masks_.count(x.mask64()) > 0;
    }
    return false;
}

std::vector<std::uint64_t> family::explicit_masks() const {
    std::vector<std::uint64_t> out(masks_.begin(), masks_.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_regressive(const finite_tree& tree, const regressive_map& f) {
    for (int t : f.domain.members()) {
        int image = f.assignment[t];
        if (t == tree.root()) {
            if (image != t) return false;
        } else if (!tree.strictly_less(image, t)) {
            return false;
        }
    }
    return true;
}

node_set diag_union(const finite_tree& tree, const std::vector<node_set>& sets) {
    if (static_cast<int>(sets.size()) != tree.size())
        fail(errc::invalid_argument, "diag_union: one set per node required");
    node_set out(tree.size());
    for (int t = 0; t < tree.size(); ++t) out |= sets[t] & tree.cone(t);
    return out;
}

namespace {

struct regressive_search {
    const finite_tree& tree;
    const family& fam;
    std::vector<int> order;        // nodes of X, decreasing depth
    std::vector<node_set> fibers;  // per target node
    std::vector<int> assignment;

    regressive_search(const finite_tree& t, const node_set& x, const family& f)
        : tree(t), fam(f), order(x.members()),
          fibers(t.size(), node_set(t.size())),
          assignment(t.size(), -1) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (tree.depth(a) != tree.depth(b)) return tree.depth(a) > tree.depth(b);
            return a < b;
        });
    }

    bool try_assign(std::size_t idx, int node, int target) {
        fibers[target].insert(node);
        if (fam.member(fibers[target])) {
            assignment[node] = target;
            if (search(idx + 1)) return true;
            assignment[node] = -1;
        }
        fibers[target].erase(node);
        return false;
    }

    bool search(std::size_t idx) {
        if (idx == order.size()) return true;
        int node = order[idx];
        if (node == tree.root()) return try_assign(idx, node, node);
        for (int target : tree.pred(node).members())
            if (try_assign(idx, node, target)) return true;
        return false;
    }
};

} // namespace

diag_membership in_diag_ideal(const finite_tree& tree, const node_set& x,
                              const family& f) {
    const long budget = search_guard(guard::regressive_search_nodes);
    if (x.size() > budget)
        fail(errc::search_budget_exceeded,
             "in_diag_ideal: |X| exceeds guard " + std::to_string(budget));

    regressive_search search(tree, x, f);
    if (!search.search(0)) return {false, std::nullopt};
    return {true, regressive_map{x, std::move(search.assignment)}};
}

antichain_cover special_cover(const finite_tree& tree, const node_set& x) {
    std::vector<int> nodes = x.members();
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
        if (tree.depth(a) != tree.depth(b)) return tree.depth(a) < tree.depth(b);
        return a < b;
    });
    // level(t) = longest chain inside X with maximum t
    std::vector<int> level(tree.size(), 0);
    int max_level = 0;
    for (int t : nodes) {
        int best = 0;
        for (int a : (x & tree.pred(t)).members()) best = std::max(best, level[a]);
        level[t] = best + 1;
        max_level = std::max(max_level, level[t]);
    }
    std::vector<node_set> cover(max_level, node_set(tree.size()));
    for (int t : nodes) cover[level[t] - 1].insert(t);
    return {std::move(cover), max_level};
}

std::vector<node_set> merge_special_above_antichain(const finite_tree& tree,
                                                    const std::vector<int>& antichain,
                                                    const std::vector<node_set>& x_sets,
                                                    int m) {
    if (antichain.size() != x_sets.size())
        fail(errc::invalid_argument, "one subtree per antichain node required");
    for (std::size_t i = 0; i < antichain.size(); ++i)
        for (std::size_t j = i + 1; j < antichain.size(); ++j)
            if (tree.comparable(antichain[i], antichain[j]))
                fail(errc::not_an_antichain, "nodes are comparable");

    std::vector<node_set> merged;
    for (std::size_t i = 0; i < antichain.size(); ++i) {
        if (!x_sets[i].subset_of(tree.cone(antichain[i])))
            fail(errc::not_in_cone,
                 "subtree not inside cone of node " + std::to_string(antichain[i]));
        antichain_cover cover = special_cover(tree, x_sets[i]);
        if (cover.min_count > m)
            fail(errc::budget_violated,
                 "subtree above node " + std::to_string(antichain[i]) +
                     " is not " + std::to_string(m) + "-special");
        // reuse antichain indices: cones above incomparable nodes are
        // pairwise incomparable, so the unions stay antichains
        while (merged.size() < cover.cover.size())
            merged.push_back(node_set(tree.size()));
        for (std::size_t j = 0; j < cover.cover.size(); ++j)
            merged[j] |= cover.cover[j];
    }
    return merged;
}

diag_membership ns_member(const finite_tree& tree, const node_set& x, int m) {
    if (m < 1) fail(errc::param_out_of_range, "ns_member: m must be >= 1");
    return in_diag_ideal(tree, x, family::make_m_special(tree, m));
}

regressive_map isolated_regressive(const finite_tree& tree, const node_set& s) {
    regressive_map f{s, std::vector<int>(tree.size(), -1)};
    for (int t : s.members()) {
        node_set below = s & tree.pred(t);
        if (below.empty()) {
            f.assignment[t] = tree.root();
        } else {
            int best = -1;
            for (int a : below.members())
                if (best == -1 || tree.depth(a) > tree.depth(best)) best = a;
            f.assignment[t] = best;
        }
    }
    if (s.contains(tree.root())) f.assignment[tree.root()] = tree.root();
    return f;
}

family diag_iterate(const finite_tree& tree, const family& f, int rounds) {
    const long cap = search_guard(guard::diag_iterate_nodes);
    if (tree.size() > cap)
        fail(errc::ambient_too_large,
             "diag_iterate: tree exceeds guard " + std::to_string(cap));
    if (rounds < 1) fail(errc::param_out_of_range, "diag_iterate: rounds must be >= 1");

    const int n = tree.size();
    family current = f;
    for (int round = 0; round < rounds; ++round) {
        std::vector<node_set> members;
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            node_set x = node_set::from_mask64(n, mask);
            if (in_diag_ideal(tree, x, current).member) members.push_back(x);
        }
        current = family::make_explicit(n, members);
    }
    return current;
}

} // namespace arbor
