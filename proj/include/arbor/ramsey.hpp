#ifndef ARBOR_RAMSEY_HPP
#define ARBOR_RAMSEY_HPP

#include "arbor/coloring.hpp"
#include "arbor/node_set.hpp"
#include "arbor/tree.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace arbor {

// required homogeneous-chain length per color
struct arrow_goal {
    std::vector<int> goals;

    int colors() const { return static_cast<int>(goals.size()); }
};

struct homog_chain {
    int length;
    node_set chain;
};

// A maximum-cardinality chain whose pairs all carry the given color.
// Singletons are vacuously homogeneous.  Ties break toward the
// lexicographically least node set.
homog_chain max_homog_chain(const pair_coloring& coloring, int chi);

struct arrow_verdict {
    bool holds;
    // counterexample coloring when holds is false; re-verified before return
    std::optional<pair_coloring> witness_coloring;
    // a goal-meeting chain from the last coloring examined, when holds
    std::optional<std::pair<node_set, int>> witness_chain;
    long long colorings_examined = 0;
};

// Decides ambient -> (goals)^2: true iff every total coloring of the
// comparable pairs admits a chi-homogeneous chain of length goals[chi] for
// some chi.  Exhaustive with incremental pruning: a branch is abandoned as
// soon as the assigned pairs force a goal-meeting chain, and accepted early
// when no completion can meet any goal.  search_space_too_large when
// k^pairs exceeds the guard.
arrow_verdict arrows_decide(const strict_order& order, const arrow_goal& goal,
                            int workers = 1);

struct pullback_result {
    node_set tree_chain;  // nodes of sigma'P, root excluded
    node_set poset_chain; // image under the max map
    int color;
};

// Transfer through sigma'P: pull the coloring back along the max map, find
// a homogeneous chain of the goal length among non-root nodes, push it
// forward.  no_homogeneous_chain when no color meets its goal.
pullback_result pullback_transfer(const finite_poset& poset,
                                  const pair_coloring& coloring,
                                  const arrow_goal& goal);

} // namespace arbor

#endif
