#include "arbor/hierarchy.hpp"

#include "arbor/errors.hpp"

#include <algorithm>
#include <string>

namespace arbor {

std::vector<color_seq> sigma_zero(int k) {
    if (k < 1) fail(errc::param_out_of_range, "sigma_zero: k must be >= 1");
    std::vector<color_seq> out;
    std::vector<color_seq> frontier = {{}};
    for (int len = 1; len <= k; ++len) {
        std::vector<color_seq> next;
        for (const auto& seq : frontier)
            for (int c = 0; c < k; ++c) {
                if (std::find(seq.begin(), seq.end(), c) != seq.end()) continue;
                color_seq extended = seq;
                extended.push_back(c);
                out.push_back(extended);
                next.push_back(std::move(extended));
            }
        frontier = std::move(next);
    }
    return out;
}

hierarchy::hierarchy(hierarchy_config config) : config_(std::move(config)) {
    const int n = config_.tree.size();
    if (n > 64)
        fail(errc::ambient_too_large, "hierarchy: tree must have <= 64 nodes");
    if (config_.coloring.order().n != n)
        fail(errc::invalid_argument, "hierarchy: coloring ambient must be the tree");
    if (config_.coloring.colors() > 15)
        fail(errc::ambient_too_large, "hierarchy: at most 15 colors supported");
    if (static_cast<int>(config_.base.size()) != n)
        fail(errc::invalid_argument, "hierarchy: one base family per node required");
    levels_.push_back(config_.s0);
}

void hierarchy::extend_levels(int depth) {
    while (static_cast<int>(levels_.size()) <= depth) {
        const node_set& prev = levels_.back();
        node_set next(config_.tree.size());
        for (int t : prev.members())
            if (!config_.base[t].member(prev & config_.tree.pred(t))) next.insert(t);
        levels_.push_back(std::move(next));
    }
}

const node_set& hierarchy::level(int n) {
    extend_levels(n);
    return levels_[n];
}

std::vector<node_set> hierarchy::s_sequence(int depth) {
    if (depth < 0) fail(errc::param_out_of_range, "s_sequence: depth must be >= 0");
    extend_levels(depth);
    return std::vector<node_set>(levels_.begin(), levels_.begin() + depth + 1);
}

namespace {

// injective for k <= 15 and |sigma| <= 16
std::uint64_t sigma_code(const color_seq& sigma, int k) {
    std::uint64_t code = 0;
    for (int c : sigma) code = code * (k + 1) + (c + 1);
    return code;
}

} // namespace

bool hierarchy::in_j(int t, const color_seq& sigma, const node_set& x) {
    config_.tree.require_node(t);
    const int depth = static_cast<int>(sigma.size());
    if (!level(depth).contains(t))
        fail(errc::node_not_in_level,
             "node " + std::to_string(t) + " is not in S_" + std::to_string(depth));
    node_set pred = config_.tree.pred(t);
    if (!x.subset_of(pred))
        fail(errc::invalid_argument, "X must be a subset of pred(t)");

    if (sigma.empty()) return config_.base[t].member(x);

    memo_key key{t, sigma_code(sigma, config_.coloring.colors()), x.mask64()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // { s in S_{|sigma|-1} below t : X within pred(s) is I(s,sigma)-positive }
    node_set reflecting(config_.tree.size());
    for (int s : (level(depth - 1) & pred).members())
        if (!in_i(s, sigma, x & config_.tree.pred(s))) reflecting.insert(s);
    bool result = config_.base[t].member(reflecting);
    memo_[key] = result;
    return result;
}

bool hierarchy::in_i(int t, const color_seq& sigma, const node_set& x) {
    if (sigma.empty())
        fail(errc::invalid_argument, "in_i: sigma must be nonempty");
    const int i = sigma.back();
    if (i < 0 || i >= config_.coloring.colors())
        fail(errc::invalid_color, "in_i: color out of range");
    config_.tree.require_node(t);
    const int depth = static_cast<int>(sigma.size()) - 1;
    if (!level(depth).contains(t))
        fail(errc::node_not_in_level,
             "node " + std::to_string(t) + " is not in S_" + std::to_string(depth));
    if (!x.subset_of(config_.tree.pred(t)))
        fail(errc::invalid_argument, "X must be a subset of pred(t)");

    color_seq prefix(sigma.begin(), sigma.end() - 1);
    return in_j(t, prefix, x & c_chi(config_.coloring, t, i));
}

std::vector<color_seq> hierarchy::sigma_set(int t, const node_set& s) {
    config_.tree.require_node(t);
    std::vector<color_seq> out;
    node_set x = s & config_.tree.pred(t);
    for (const auto& sigma : sigma_zero(config_.coloring.colors())) {
        int depth = static_cast<int>(sigma.size()) - 1;
        if (!level(depth).contains(t)) continue;
        if (!in_i(t, sigma, x)) out.push_back(sigma);
    }
    return out;
}

} // namespace arbor
