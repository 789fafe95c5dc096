#include "arbor/coloring.hpp"

#include "arbor/errors.hpp"
#include "arbor/guards.hpp"
#include "arbor/rng.hpp"

#include <algorithm>
#include <string>

namespace arbor {

pair_coloring::pair_coloring(strict_order order, int k,
                             const std::function<int(int, int)>& assign)
    : order_(std::move(order)), k_(k) {
    if (k_ < 1) fail(errc::param_out_of_range, "coloring needs k >= 1");
    const long cap = search_guard(guard::coloring_nodes);
    if (order_.n > cap)
        fail(errc::ambient_too_large,
             "coloring ambient exceeds guard " + std::to_string(cap));
    value_.assign(static_cast<std::size_t>(order_.n) * order_.n, -1);
    for (auto [u, v] : order_.comparable_pairs()) {
        int c = assign(u, v);
        if (c < 0 || c >= k_)
            fail(errc::invalid_color, "assigned color out of range");
        value_[static_cast<std::size_t>(u) * order_.n + v] = static_cast<signed char>(c);
        value_[static_cast<std::size_t>(v) * order_.n + u] = static_cast<signed char>(c);
    }
}

int pair_coloring::color(int u, int v) const {
    if (u < 0 || v < 0 || u >= order_.n || v >= order_.n)
        fail(errc::invalid_node, "pair node out of range");
    signed char c = value_[static_cast<std::size_t>(u) * order_.n + v];
    if (c < 0)
        fail(errc::incomparable_pair, "pair {" + std::to_string(u) + "," +
                                          std::to_string(v) + "} is not comparable");
    return c;
}

bool pair_coloring::has_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= order_.n || v >= order_.n || u == v) return false;
    return value_[static_cast<std::size_t>(u) * order_.n + v] >= 0;
}

node_set c_chi(const pair_coloring& coloring, int t, int chi) {
    if (chi < 0 || chi >= coloring.colors())
        fail(errc::invalid_color, "color " + std::to_string(chi) + " out of range");
    if (t < 0 || t >= coloring.order().n)
        fail(errc::invalid_node, "node out of range");
    node_set out(coloring.order().n);
    for (int s : coloring.order().below[t].members())
        if (coloring.color(s, t) == chi) out.insert(s);
    return out;
}

specializing_map depth_specializing_map(const finite_tree& tree) {
    specializing_map f;
    f.label.resize(tree.size());
    for (int t = 0; t < tree.size(); ++t) f.label[t] = tree.depth(t);
    return f;
}

int distinct_label_count(const specializing_map& f) {
    std::vector<int> labels = f.label;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return static_cast<int>(labels.size());
}

pair_coloring galvin_coloring(const finite_tree& tree, const specializing_map& f) {
    if (static_cast<int>(f.label.size()) != tree.size())
        fail(errc::invalid_argument, "specializing map must label every node");
    return pair_coloring(order_view(tree), 2, [&](int x, int y) {
        if (f.label[x] == f.label[y])
            fail(errc::not_specializing, "comparable nodes " + std::to_string(x) +
                                             " and " + std::to_string(y) +
                                             " share a label");
        return f.label[x] < f.label[y] ? 0 : 1;
    });
}

pair_coloring sierpinski_coloring(int n, const std::vector<int>& second_order) {
    if (static_cast<int>(second_order.size()) != n)
        fail(errc::not_a_permutation, "permutation length must be n");
    std::vector<bool> seen(n, false);
    for (int v : second_order) {
        if (v < 0 || v >= n || seen[v])
            fail(errc::not_a_permutation, "values must be a permutation of 0..n-1");
        seen[v] = true;
    }
    return pair_coloring(order_view(gen_path(n)), 2, [&](int i, int j) {
        return second_order[i] < second_order[j] ? 0 : 1;
    });
}

pair_coloring random_coloring(const strict_order& order, int k, std::uint64_t seed) {
    split_mix64 rng(seed);
    return pair_coloring(order, k, [&](int, int) { return static_cast<int>(rng.below(k)); });
}

pair_coloring constant_coloring(const strict_order& order, int k, int color) {
    if (color < 0 || color >= k) fail(errc::invalid_color, "constant color out of range");
    return pair_coloring(order, k, [&](int, int) { return color; });
}

} // namespace arbor
