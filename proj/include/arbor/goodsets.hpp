#ifndef ARBOR_GOODSETS_HPP
#define ARBOR_GOODSETS_HPP

#include "arbor/coloring.hpp"
#include "arbor/node_set.hpp"

#include <optional>
#include <vector>

namespace arbor {

// finite sequence of colors; as an element of Sigma_0 it is nonempty and
// injective
using color_seq = std::vector<int>;

// Witness that a chain is (rho,sigma)-good.  A leaf holds a single node; an
// internal level holds rho child decompositions in tree order plus the
// level's color.  The outermost level corresponds to the LAST entry of
// sigma: sigma+<i> wraps (rho,sigma)-good inner blocks with level color i.
struct good_decomposition {
    int leaf = -1;        // node index at a leaf, -1 otherwise
    int level_color = -1; // color at an internal level, -1 at a leaf
    std::vector<good_decomposition> blocks;

    bool is_leaf() const { return blocks.empty(); }
    // leaves in block order
    std::vector<int> leaves() const;
    // uniform nesting depth; arity_mismatch when ragged
    int nesting_depth() const;
};

// True iff d certifies its leaf set as (rho,sigma)-good: level colors match
// sigma from the outside in, blocks ascend elementwise in the order, and
// every cross-block pair carries the level color.  Structural shape
// mismatches (depth != |sigma|, block count != rho) are arity_mismatch.
bool is_good(const pair_coloring& coloring, const good_decomposition& d, int rho,
             const color_seq& sigma);

// Complete backtracking search for a (rho,sigma)-good subset of the chain x;
// nullopt iff none exists.  not_a_chain when x is not a chain;
// search_budget_exceeded when |x| exceeds the guard.
std::optional<good_decomposition> build_good(const pair_coloring& coloring,
                                             const node_set& x, int rho,
                                             const color_seq& sigma);

// A chain of exactly rho nodes among d's leaves, homogeneous in the given
// color: descend into the first block while the color sits deeper, pick one
// representative per block at its own level.  color_not_in_range when the
// color is not a level color of d.  Re-verified before return.
node_set extract_homog(const good_decomposition& d, const pair_coloring& coloring,
                       int color);

struct refine_result {
    good_decomposition refined;
    int g_color;
};

// Shrink every level from arity rho to arity xi, keeping only blocks whose
// refinements share one g-color, so the result is (xi,sigma)-good with g
// constant on its leaves.  Requires rho -> (xi)^1_m, i.e.
// verify_pigeonhole_finite(rho, xi, m); pigeonhole_hypothesis_fails
// otherwise.  g maps node index -> 0..m-1.
refine_result refine_good(const good_decomposition& d, const pair_coloring& coloring,
                          const std::vector<int>& g, int xi, int m);

} // namespace arbor

#endif
