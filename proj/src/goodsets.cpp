#include "arbor/goodsets.hpp"

#include "arbor/errors.hpp"
#include "arbor/guards.hpp"
#include "arbor/ordinal.hpp"

#include <algorithm>
#include <string>

namespace arbor {

std::vector<int> good_decomposition::leaves() const {
    std::vector<int> out;
    auto collect = [&](auto&& self, const good_decomposition& d) -> void {
        if (d.is_leaf()) {
            out.push_back(d.leaf);
            return;
        }
        for (const auto& b : d.blocks) self(self, b);
    };
    collect(collect, *this);
    return out;
}

int good_decomposition::nesting_depth() const {
    if (is_leaf()) return 0;
    int depth = blocks[0].nesting_depth();
    for (const auto& b : blocks)
        if (b.nesting_depth() != depth)
            fail(errc::arity_mismatch, "ragged decomposition depth");
    return depth + 1;
}

namespace {

// all pairs a in lo, b in hi satisfy a < b and c{a,b} = color
bool cross_block_ok(const pair_coloring& coloring, const std::vector<int>& lo,
                    const std::vector<int>& hi, int color) {
    for (int a : lo)
        for (int b : hi) {
            if (!coloring.order().less(a, b)) return false;
            if (coloring.color(a, b) != color) return false;
        }
    return true;
}

bool check_good(const pair_coloring& coloring, const good_decomposition& d, int rho,
                const color_seq& sigma, int level) {
    // level counts remaining sigma entries below this node
    if (level == 0) {
        if (!d.is_leaf()) fail(errc::arity_mismatch, "internal node at leaf depth");
        return d.leaf >= 0 && d.leaf < coloring.order().n;
    }
    if (d.is_leaf()) fail(errc::arity_mismatch, "leaf above leaf depth");
    if (static_cast<int>(d.blocks.size()) != rho)
        fail(errc::arity_mismatch, "level has " + std::to_string(d.blocks.size()) +
                                       " blocks, expected " + std::to_string(rho));
    if (d.level_color != sigma[level - 1]) return false;

    std::vector<std::vector<int>> block_leaves;
    block_leaves.reserve(d.blocks.size());
    for (const auto& b : d.blocks) {
        if (!check_good(coloring, b, rho, sigma, level - 1)) return false;
        block_leaves.push_back(b.leaves());
    }
    for (std::size_t i = 0; i < block_leaves.size(); ++i)
        for (std::size_t j = i + 1; j < block_leaves.size(); ++j)
            if (!cross_block_ok(coloring, block_leaves[i], block_leaves[j],
                                d.level_color))
                return false;
    return true;
}

} // namespace

bool is_good(const pair_coloring& coloring, const good_decomposition& d, int rho,
             const color_seq& sigma) {
    if (rho < 1) fail(errc::param_out_of_range, "is_good: rho must be >= 1");
    for (int c : sigma)
        if (c < 0 || c >= coloring.colors())
            fail(errc::invalid_color, "sigma entry out of range");
    if (d.nesting_depth() != static_cast<int>(sigma.size()))
        fail(errc::arity_mismatch, "decomposition depth does not match |sigma|");

    bool ok = check_good(coloring, d, rho, sigma, static_cast<int>(sigma.size()));
    if (!ok) return false;
    // leaves must be distinct
    auto ls = d.leaves();
    std::vector<int> sorted = ls;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// decomposition over leaves[0..rho^depth) grouped rho blocks per level
good_decomposition assemble(const std::vector<int>& leaves, std::size_t begin,
                            std::size_t count, int rho, const color_seq& sigma,
                            int level) {
    good_decomposition d;
    if (level == 0) {
        d.leaf = leaves[begin];
        return d;
    }
    d.level_color = sigma[level - 1];
    std::size_t block = count / rho;
    d.blocks.reserve(rho);
    for (int b = 0; b < rho; ++b)
        d.blocks.push_back(
            assemble(leaves, begin + b * block, block, rho, sigma, level - 1));
    return d;
}

struct good_search {
    const pair_coloring& coloring;
    std::vector<int> chain;  // x ascending in the order
    std::size_t need;        // rho^|sigma| leaves
    std::vector<std::vector<int>> required; // color constraint per position pair
    std::vector<int> chosen;                // chain indices per position

    good_search(const pair_coloring& c, std::vector<int> nodes, std::size_t n,
                int rho, const color_seq& sigma)
        : coloring(c), chain(std::move(nodes)), need(n) {
        // positions p < q in the flattened leaf order must be colored by the
        // sigma entry of their most significant differing base-rho digit
        const int depth = static_cast<int>(sigma.size());
        std::vector<std::vector<int>> digits(need, std::vector<int>(depth));
        for (std::size_t p = 0; p < need; ++p) {
            std::size_t rem = p;
            for (int dgt = 0; dgt < depth; ++dgt) {
                digits[p][dgt] = static_cast<int>(rem % rho);
                rem /= rho;
            }
        }
        required.assign(need, std::vector<int>(need, -1));
        for (std::size_t p = 0; p < need; ++p)
            for (std::size_t q = p + 1; q < need; ++q)
                for (int dgt = depth - 1; dgt >= 0; --dgt)
                    if (digits[p][dgt] != digits[q][dgt]) {
                        required[p][q] = sigma[dgt];
                        break;
                    }
        chosen.assign(need, -1);
    }

    bool place(std::size_t pos, std::size_t from) {
        if (pos == need) return true;
        for (std::size_t i = from; i + (need - pos - 1) < chain.size(); ++i) {
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q)
                ok = coloring.color(chain[chosen[q]], chain[i]) == required[q][pos];
            if (!ok) continue;
            chosen[pos] = static_cast<int>(i);
            if (place(pos + 1, i + 1)) return true;
            chosen[pos] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<good_decomposition> build_good(const pair_coloring& coloring,
                                             const node_set& x, int rho,
                                             const color_seq& sigma) {
    if (rho < 1) fail(errc::param_out_of_range, "build_good: rho must be >= 1");
    for (int c : sigma)
        if (c < 0 || c >= coloring.colors())
            fail(errc::invalid_color, "sigma entry out of range");

    const long cap = search_guard(guard::build_good_chain);
    if (x.size() > cap)
        fail(errc::search_budget_exceeded,
             "build_good: |X| exceeds guard " + std::to_string(cap));

    std::vector<int> nodes = x.members();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (!coloring.order().comparable(nodes[i], nodes[j]))
                fail(errc::not_a_chain, "X must be a chain");
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
        return coloring.order().less(a, b);
    });

    std::size_t need = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        need *= static_cast<std::size_t>(rho);
        if (need > nodes.size()) return std::nullopt;
    }
    if (need > nodes.size()) return std::nullopt;

    good_search search(coloring, std::move(nodes), need, rho, sigma);
    if (!search.place(0, 0)) return std::nullopt;

    std::vector<int> leaves(need);
    for (std::size_t p = 0; p < need; ++p) leaves[p] = search.chain[search.chosen[p]];
    return assemble(leaves, 0, need, rho, sigma, static_cast<int>(sigma.size()));
}

node_set extract_homog(const good_decomposition& d, const pair_coloring& coloring,
                       int color) {
    const good_decomposition* cur = &d;
    node_set out(coloring.order().n);
    for (;;) {
        if (cur->is_leaf())
            fail(errc::color_not_in_range,
                 "color " + std::to_string(color) + " is not a level color");
        if (cur->level_color == color) {
            // one representative per block: cross pairs carry the level color
            for (const auto& b : cur->blocks) out.insert(b.leaves().front());
            break;
        }
        cur = &cur->blocks.front();
    }

    auto nodes = out.members();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (!coloring.order().comparable(nodes[i], nodes[j]) ||
                coloring.color(nodes[i], nodes[j]) != color)
                throw std::logic_error("extract_homog produced a bad chain");
    return out;
}

namespace {

refine_result refine_rec(const good_decomposition& d, const pair_coloring& coloring,
                         const std::vector<int>& g, int xi, int m) {
    if (d.is_leaf()) {
        int value = g[d.leaf];
        if (value < 0 || value >= m)
            fail(errc::invalid_argument, "g value out of range at a leaf");
        return {d, value};
    }
    const int rho = static_cast<int>(d.blocks.size());
    if (!verify_pigeonhole_finite(rho, xi, m))
        fail(errc::pigeonhole_hypothesis_fails,
             std::to_string(rho) + " -> (" + std::to_string(xi) + ")^1_" +
                 std::to_string(m) + " fails");

    std::vector<refine_result> refined;
    refined.reserve(rho);
    for (const auto& b : d.blocks) refined.push_back(refine_rec(b, coloring, g, xi, m));

    // pigeonhole the per-block g-colors; some fiber has >= xi blocks
    for (int j = 0; j < m; ++j) {
        good_decomposition out;
        out.level_color = d.level_color;
        for (int b = 0; b < rho && static_cast<int>(out.blocks.size()) < xi; ++b)
            if (refined[b].g_color == j) out.blocks.push_back(refined[b].refined);
        if (static_cast<int>(out.blocks.size()) == xi) return {std::move(out), j};
    }
    fail(errc::pigeonhole_hypothesis_fails, "no g-fiber of the required size");
}

} // namespace

refine_result refine_good(const good_decomposition& d, const pair_coloring& coloring,
                          const std::vector<int>& g, int xi, int m) {
    if (xi < 1 || m < 1)
        fail(errc::param_out_of_range, "refine_good: xi and m must be >= 1");
    if (static_cast<int>(g.size()) < coloring.order().n)
        fail(errc::invalid_argument, "g must cover every node");
    return refine_rec(d, coloring, g, xi, m);
}

} // namespace arbor
