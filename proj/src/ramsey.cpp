#include "arbor/ramsey.hpp"

#include "arbor/errors.hpp"
#include "arbor/guards.hpp"

#include <atomic>
#include <limits>
#include <cmath>
#include <string>
#include <thread>

namespace arbor {

namespace {

// Max clique over a symmetric adjacency, include-first in ascending node
// order so the first maximum found is the lexicographically least set.
struct clique_search {
    const std::vector<node_set>* adj = nullptr;
    int n = 0;
    int best = 0;
    node_set best_set;
    node_set current;

    void reset(const std::vector<node_set>& adjacency, int nodes) {
        adj = &adjacency;
        n = nodes;
        best = 0;
        best_set = node_set(n);
        current = node_set(n);
    }

    void run(const node_set& candidates, int have) {
        if (have > best) {
            best = have;
            best_set = current;
        }
        if (have + candidates.size() <= best) return;
        node_set rest = candidates;
        for (int v : candidates.members()) {
            rest.erase(v);
            current.insert(v);
            run(rest & (*adj)[v], have + 1);
            current.erase(v);
            if (have + rest.size() <= best) return;
        }
    }
};

bool verify_chain(const pair_coloring& coloring, const node_set& chain, int chi) {
    auto nodes = chain.members();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (!coloring.order().comparable(nodes[i], nodes[j])) return false;
            if (coloring.color(nodes[i], nodes[j]) != chi) return false;
        }
    return true;
}

} // namespace

homog_chain max_homog_chain(const pair_coloring& coloring, int chi) {
    if (chi < 0 || chi >= coloring.colors())
        fail(errc::invalid_color, "color out of range");
    const int n = coloring.order().n;
    if (n == 0) return {0, node_set(0)};

    std::vector<node_set> adj(n, node_set(n));
    for (auto [u, v] : coloring.pairs())
        if (coloring.color(u, v) == chi) {
            adj[u].insert(v);
            adj[v].insert(u);
        }

    clique_search search;
    search.reset(adj, n);
    search.run(node_set::full(n), 0);

    if (!verify_chain(coloring, search.best_set, chi))
        throw std::logic_error("max_homog_chain produced an invalid chain");
    return {search.best, search.best_set};
}

namespace {

struct arrow_search {
    const strict_order* order;
    const arrow_goal* goal;
    int k;
    std::vector<std::pair<int, int>> pairs;
    bool restrict_first_pair = false;
    std::vector<signed char> prefix; // forced colors for the first pairs

    std::vector<std::vector<node_set>> adj; // adj[chi][v], assigned pairs
    std::vector<node_set> open_adj;         // unassigned comparable pairs
    std::vector<signed char> assigned;
    long long examined = 0;

    // a worker abandons its slice only when a counterexample exists in an
    // earlier slice, so the lowest-index counterexample always completes
    // and the merged verdict is deterministic
    std::atomic<long>* lowest_found = nullptr;
    long slice_index = 0;

    bool found = false;
    long found_index = 0;
    std::vector<signed char> counterexample;
    std::optional<std::pair<node_set, int>> last_forced;

    clique_search clique;

    bool superseded() const {
        return lowest_found->load(std::memory_order_relaxed) < slice_index;
    }

    void init(const strict_order& o, const arrow_goal& g) {
        order = &o;
        goal = &g;
        k = g.colors();
        pairs = o.comparable_pairs();
        adj.assign(k, std::vector<node_set>(o.n, node_set(o.n)));
        open_adj.assign(o.n, node_set(o.n));
        for (auto [u, v] : pairs) {
            open_adj[u].insert(v);
            open_adj[v].insert(u);
        }
        assigned.assign(pairs.size(), -1);
    }

    void set_pair(std::size_t p, int chi) {
        auto [u, v] = pairs[p];
        assigned[p] = static_cast<signed char>(chi);
        adj[chi][u].insert(v);
        adj[chi][v].insert(u);
        open_adj[u].erase(v);
        open_adj[v].erase(u);
    }

    void unset_pair(std::size_t p) {
        auto [u, v] = pairs[p];
        int chi = assigned[p];
        assigned[p] = -1;
        adj[chi][u].erase(v);
        adj[chi][v].erase(u);
        open_adj[u].insert(v);
        open_adj[v].insert(u);
    }

    // longest chi-chain forced through the pair just assigned
    node_set forced_chain(std::size_t p, int chi) {
        auto [u, v] = pairs[p];
        clique.reset(adj[chi], order->n);
        clique.current.insert(u);
        clique.current.insert(v);
        clique.best = 2;
        clique.best_set = clique.current;
        clique.run(adj[chi][u] & adj[chi][v], 2);
        return clique.best_set;
    }

    // true when no completion of the current partial coloring can meet any
    // goal: unassigned pairs count as wildcards for every color
    bool every_completion_fails() {
        std::vector<node_set> optimistic(order->n, node_set(order->n));
        for (int chi = 0; chi < k; ++chi) {
            for (int v = 0; v < order->n; ++v) optimistic[v] = adj[chi][v] | open_adj[v];
            clique.reset(optimistic, order->n);
            clique.run(node_set::full(order->n), 0);
            if (clique.best >= goal->goals[chi]) return false;
        }
        return true;
    }

    void record_counterexample() {
        found = true;
        found_index = slice_index;
        counterexample = assigned;
        for (auto& c : counterexample)
            if (c < 0) c = 0;
        long seen = lowest_found->load(std::memory_order_relaxed);
        while (slice_index < seen &&
               !lowest_found->compare_exchange_weak(seen, slice_index)) {
        }
    }

    bool dfs(std::size_t p) {
        if (superseded()) return false;
        if (p == pairs.size()) {
            // no forced chain met a goal on the way down, so this total
            // coloring is a counterexample
            record_counterexample();
            return true;
        }
        int lo = 0;
        int hi = k - 1;
        if (p < prefix.size())
            lo = hi = prefix[p];
        else if (p == 0 && restrict_first_pair)
            hi = 0;
        for (int chi = lo; chi <= hi; ++chi) {
            set_pair(p, chi);
            ++examined;
            node_set chain = forced_chain(p, chi);
            if (chain.size() >= goal->goals[chi]) {
                last_forced = {chain, chi}; // every completion contains it
            } else if (every_completion_fails()) {
                record_counterexample();
                unset_pair(p);
                return true;
            } else if (dfs(p + 1)) {
                unset_pair(p);
                return true;
            }
            unset_pair(p);
        }
        return false;
    }
};

} // namespace

arrow_verdict arrows_decide(const strict_order& order, const arrow_goal& goal,
                            int workers) {
    const int k = goal.colors();
    if (k < 1) fail(errc::param_out_of_range, "arrow goal needs at least one color");
    for (int g : goal.goals)
        if (g < 1) fail(errc::param_out_of_range, "arrow goals must be >= 1");
    if (workers < 1) fail(errc::param_out_of_range, "workers must be >= 1");

    arrow_verdict verdict;
    verdict.holds = false;

    // a singleton chain meets a goal of 1 under any coloring
    for (int chi = 0; chi < k; ++chi)
        if (goal.goals[chi] == 1 && order.n >= 1) {
            verdict.holds = true;
            verdict.witness_chain = {node_set(order.n, {0}), chi};
            return verdict;
        }

    auto pairs = order.comparable_pairs();
    const long bit_guard = search_guard(guard::arrow_pairs);
    double bits = k <= 1 ? 0.0 : pairs.size() * std::log2(static_cast<double>(k));
    if (bits > static_cast<double>(bit_guard))
        fail(errc::search_space_too_large,
             "arrow: k^pairs exceeds 2^" + std::to_string(bit_guard) +
                 " colorings (set ARBOR_SEARCH_GUARD to raise)");

    bool equal_goals = true;
    for (int g : goal.goals) equal_goals = equal_goals && g == goal.goals[0];
    const bool restrict_first = order.is_linear() && equal_goals && k >= 2 && !pairs.empty();

    std::atomic<long> lowest_found{std::numeric_limits<long>::max()};

    auto make_witness = [&](const arrow_search& search) {
        const auto& coloring = search.counterexample;
        const auto& pair_list = search.pairs;
        pair_coloring witness(order, k, [&](int u, int v) {
            for (std::size_t i = 0; i < pair_list.size(); ++i)
                if (pair_list[i] == std::make_pair(u, v))
                    return static_cast<int>(coloring[i]);
            return 0;
        });
        // certify: no color meets its goal under the witness
        for (int chi = 0; chi < k; ++chi)
            if (max_homog_chain(witness, chi).length >= goal.goals[chi])
                throw std::logic_error("arrow witness failed re-verification");
        verdict.witness_coloring = std::move(witness);
    };

    if (workers == 1 || pairs.size() < 2) {
        arrow_search search;
        search.init(order, goal);
        search.restrict_first_pair = restrict_first;
        search.lowest_found = &lowest_found;
        search.dfs(0);
        verdict.colorings_examined = search.examined;
        if (search.found) make_witness(search);
        if (search.last_forced) verdict.witness_chain = search.last_forced;
        verdict.holds = !verdict.witness_coloring.has_value();
        if (!verdict.holds) verdict.witness_chain.reset();
        return verdict;
    }

    // Split the enumeration by fixing a prefix of pair colors.  Slices are
    // numbered; the counterexample from the lowest-numbered slice wins, so
    // the verdict and witness do not depend on thread timing.
    std::size_t prefix_len = 1;
    double span = k;
    while (span < 4.0 * workers && prefix_len < pairs.size()) {
        ++prefix_len;
        span *= k;
    }
    std::vector<std::vector<signed char>> prefixes;
    std::vector<signed char> cur(prefix_len, 0);
    for (;;) {
        if (!(restrict_first && cur[0] != 0)) prefixes.push_back(cur);
        std::size_t i = 0;
        while (i < prefix_len && ++cur[i] == k) cur[i++] = 0;
        if (i == prefix_len) break;
    }

    std::vector<arrow_search> states(workers);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        states[w].init(order, goal);
        states[w].lowest_found = &lowest_found;
        threads.emplace_back([&, w] {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) break;
                states[w].slice_index = static_cast<long>(idx);
                if (states[w].superseded()) break;
                states[w].prefix = prefixes[idx];
                if (states[w].dfs(0)) break; // later slices cannot win
            }
        });
    }
    for (auto& t : threads) t.join();

    const arrow_search* winner = nullptr;
    for (auto& s : states) {
        verdict.colorings_examined += s.examined;
        if (s.found && (!winner || s.found_index < winner->found_index)) winner = &s;
        if (s.last_forced) verdict.witness_chain = s.last_forced;
    }
    if (winner) make_witness(*winner);
    verdict.holds = !verdict.witness_coloring.has_value();
    if (!verdict.holds) verdict.witness_chain.reset();
    return verdict;
}

pullback_result pullback_transfer(const finite_poset& poset,
                                  const pair_coloring& coloring,
                                  const arrow_goal& goal) {
    if (goal.colors() != coloring.colors())
        fail(errc::invalid_argument, "goal colors must match the coloring");

    sigma_prime_result sp = sigma_prime(poset);
    const finite_tree& tree = sp.tree;

    // restriction of sigma'P to its non-root nodes, as a poset; node i of
    // the restriction is tree node i+1 (BFS numbering puts the root first)
    const int qn = tree.size() - 1;
    std::vector<std::pair<int, int>> qless;
    for (int b = 0; b < qn; ++b)
        for (int a = 0; a < qn; ++a)
            if (tree.strictly_less(a + 1, b + 1)) qless.push_back({a, b});
    finite_poset restricted(qn, qless);

    // pull the coloring back along the max map; well-defined because the
    // max map strictly increases along tree-comparable pairs
    pair_coloring pulled(order_view(restricted), coloring.colors(), [&](int a, int b) {
        return coloring.color(sp.max_map[a + 1], sp.max_map[b + 1]);
    });

    for (int chi = 0; chi < goal.colors(); ++chi) {
        homog_chain found = max_homog_chain(pulled, chi);
        if (found.length < goal.goals[chi]) continue;

        pullback_result out{node_set(tree.size()), node_set(poset.size()), chi};
        for (int q : found.chain.members()) {
            out.tree_chain.insert(q + 1);
            out.poset_chain.insert(sp.max_map[q + 1]);
        }
        // push-forward certificate: a chain in P, same color, same length
        auto nodes = out.poset_chain.members();
        if (static_cast<int>(nodes.size()) != found.length)
            throw std::logic_error("pullback_transfer: max map collapsed a chain");
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                if (!poset.comparable(nodes[i], nodes[j]) ||
                    coloring.color(nodes[i], nodes[j]) != chi)
                    throw std::logic_error("pullback_transfer: push-forward not homogeneous");
            }
        return out;
    }
    fail(errc::no_homogeneous_chain,
         "no color meets its goal in sigma'P under the pulled-back coloring");
}

} // namespace arbor
