#ifndef ARBOR_HIERARCHY_HPP
#define ARBOR_HIERARCHY_HPP

#include "arbor/coloring.hpp"
#include "arbor/goodsets.hpp"
#include "arbor/ideal.hpp"
#include "arbor/node_set.hpp"
#include "arbor/tree.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace arbor {

// Explicit finite base data for the I/J recursion.  Each node's base ideal
// over pred(t) is a free input.  Principal bases are the canonical choice: a
// finite family closed under pairwise unions is necessarily principal, and
// principality is exactly what the J = intersection-of-I equality needs.
// Arbitrary downward-closed bases are accepted, but then only the one-sided
// inclusion J within every I holds.
struct hierarchy_config {
    finite_tree tree;
    pair_coloring coloring;   // on the tree's comparability order
    std::vector<family> base; // base[t]: family of subsets of pred(t)
    node_set s0;
};

// all nonempty injective color sequences over 0..k-1;
// |Sigma_0| = k + k(k-1) + ... + k!
std::vector<color_seq> sigma_zero(int k);

class hierarchy {
public:
    explicit hierarchy(hierarchy_config config);

    const hierarchy_config& config() const { return config_; }

    // S_0, S_1, ..., S_depth with S_{n+1} = { t in S_n : S_n inside pred(t)
    // is base-positive }; the sequence is decreasing
    std::vector<node_set> s_sequence(int depth);

    // X in J(t,sigma): base test for empty sigma, otherwise the reflection
    // step over S_{|sigma|-1}.  Requires t in S_{|sigma|}.
    bool in_j(int t, const color_seq& sigma, const node_set& x);

    // X in I(t, sigma+<i>) iff X within c_i(t) is in J(t, sigma).
    // Requires sigma nonempty and t in S_{|sigma|-1}.
    bool in_i(int t, const color_seq& sigma, const node_set& x);

    // Sigma(t,S): the sigma in Sigma_0 whose level is defined at t and with
    // S inside pred(t) I(t,sigma)-positive
    std::vector<color_seq> sigma_set(int t, const node_set& s);

private:
    struct memo_key {
        int node;
        std::uint64_t sigma_code;
        std::uint64_t mask;
        bool operator==(const memo_key&) const = default;
    };
    struct memo_key_hash {
        std::size_t operator()(const memo_key& k) const {
            std::uint64_t h = k.mask;
            h ^= k.sigma_code * 0x9e3779b97f4a7c15ULL;
            h ^= static_cast<std::uint64_t>(k.node) * 0xbf58476d1ce4e5b9ULL;
            return h;
        }
    };

    hierarchy_config config_;
    std::vector<node_set> levels_; // cached S_n prefix
    std::unordered_map<memo_key, bool, memo_key_hash> memo_;

    void extend_levels(int depth);
    const node_set& level(int n);
};

} // namespace arbor

#endif
