#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arbor/errors.hpp"
#include "arbor/io.hpp"
#include "arbor/tree.hpp"
#include "oracles.hpp"

#include <cstdlib>
#include <sstream>

using namespace arbor;

namespace {
constexpr int none = finite_tree::none;
}

TEST_CASE("tree construction and validation") {
    finite_tree fork({none, 0, 0});
    CHECK(fork.size() == 3);
    CHECK(fork.root() == 0);
    CHECK(fork.height() == 2);

    finite_tree path4({none, 0, 1, 2});
    CHECK(path4.height() == 4);
    CHECK(path4.depth(3) == 3);

    CHECK_THROWS_AS(finite_tree({none, 2, 1}), error);
    try {
        finite_tree({none, 2, 1});
    } catch (const error& e) {
        CHECK(e.code() == errc::cycle_detected);
    }

    try {
        finite_tree({none, 0, none});
    } catch (const error& e) {
        CHECK(e.code() == errc::multiple_roots);
    }
    try {
        finite_tree({none, 7});
    } catch (const error& e) {
        CHECK(e.code() == errc::dangling_parent);
    }
}

TEST_CASE("node queries and the root cone convention") {
    finite_tree path4 = gen_path(4);
    auto q3 = node_queries(path4, 3);
    CHECK(q3.pred == node_set(4, {0, 1, 2}));
    CHECK(q3.height == 3);
    CHECK(q3.cone.empty());

    auto q0 = node_queries(path4, 0);
    CHECK(q0.cone == node_set::full(4)); // cone of the root is the whole tree
    CHECK(q0.pred.empty());

    finite_tree fork({none, 0, 0});
    CHECK(node_queries(fork, 1).cone.empty());

    CHECK_THROWS_AS(node_queries(fork, 5), error);
}

TEST_CASE("classify_subset") {
    finite_tree fork({none, 0, 0});
    auto siblings = classify_subset(fork, node_set(3, {1, 2}));
    CHECK(siblings.is_antichain);
    CHECK_FALSE(siblings.is_chain);

    finite_tree path4 = gen_path(4);
    auto nested = classify_subset(path4, node_set(4, {0, 2}));
    CHECK(nested.is_chain);
    CHECK_FALSE(nested.is_antichain);

    // finite trees have only successor/root heights
    node_set x(4, {1, 3});
    CHECK(classify_subset(path4, x).isolated_points == x);

    auto empty = classify_subset(path4, node_set(4));
    CHECK(empty.is_chain);
    CHECK(empty.is_antichain);
}

TEST_CASE("generators") {
    CHECK(gen_path(4).size() == 4);
    CHECK(gen_path(4).height() == 4);

    finite_tree complete = gen_complete(2, 3);
    CHECK(complete.size() == 7);
    CHECK(complete.height() == 3);

    // increasing sequences over {0,1,2} of length <= 2:
    // the empty one, 3 singletons, 3 pairs
    finite_tree wq = gen_wq(3, 2);
    CHECK(wq.size() == 7);
    CHECK(wq.height() == 3);

    int count = 0; // enumeration cross-check
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) ++count;
    CHECK(wq.size() == 1 + 3 + count);

    finite_tree r1 = gen_random(10, 42);
    finite_tree r2 = gen_random(10, 42);
    CHECK(r1.parents() == r2.parents());
    CHECK(gen_random(10, 43).parents() != r1.parents());

    CHECK_THROWS_AS(gen_path(0), error);
    CHECK_THROWS_AS(gen_complete(0, 3), error);
    CHECK_THROWS_AS(gen_random(0, 1), error);
}

TEST_CASE("pred is a chain of size depth; cones of incomparable nodes are disjoint") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& tree : oracle::all_trees(n)) {
            for (int t = 0; t < tree.size(); ++t) {
                node_set pred = tree.pred(t);
                CHECK(pred.size() == tree.depth(t));
                auto with_t = pred;
                with_t.insert(t);
                CHECK(classify_subset(tree, with_t).is_chain);
            }
            for (int s = 0; s < tree.size(); ++s)
                for (int t = s + 1; t < tree.size(); ++t) {
                    if (s == tree.root() || t == tree.root()) continue;
                    if (tree.comparable(s, t)) continue;
                    CHECK_FALSE(tree.cone(s).intersects(tree.cone(t)));
                }
        }
}

TEST_CASE("finite_poset validation") {
    CHECK_THROWS_AS(finite_poset(2, {{0, 1}, {1, 0}}), error);
    CHECK_THROWS_AS(finite_poset(2, {{0, 0}}), error);
    CHECK_THROWS_AS(finite_poset(3, {{0, 1}, {1, 2}}), error); // not transitive
    finite_poset ok(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(ok.strictly_less(0, 2));
    CHECK_FALSE(ok.strictly_less(2, 0));
}

TEST_CASE("sigma_prime on worked instances") {
    finite_poset antichain2(2, {});
    auto sp = sigma_prime(antichain2);
    CHECK(sp.tree.size() == 3); // root plus two singleton chains
    CHECK(sp.tree.height() == 2);

    finite_poset chain2(2, {{0, 1}});
    auto sp2 = sigma_prime(chain2);
    CHECK(sp2.tree.size() == 4); // root, <a>, <b>, <a,b>
    CHECK(sp2.tree.height() == 3);

    finite_poset mixed(3, {{0, 1}}); // a < b, c incomparable
    CHECK(sigma_prime(mixed).tree.size() == 5);
}

TEST_CASE("sigma_prime max map is a strict order homomorphism") {
    auto check_poset = [](const finite_poset& poset) {
        auto sp = sigma_prime(poset);
        const finite_tree& tree = sp.tree;
        REQUIRE(static_cast<int>(sp.max_map.size()) == tree.size());
        CHECK(sp.max_map[tree.root()] == finite_tree::none);
        for (int a = 1; a < tree.size(); ++a) {
            CHECK(sp.max_map[a] >= 0);
            for (int b = 1; b < tree.size(); ++b)
                if (tree.strictly_less(a, b))
                    CHECK(poset.strictly_less(sp.max_map[a], sp.max_map[b]));
        }
        // tree property of sigma'P: predecessor sets are linearly ordered
        for (int t = 0; t < tree.size(); ++t)
            CHECK(classify_subset(tree, tree.pred(t)).is_chain);
    };

    for (int n = 0; n <= 4; ++n)
        for (const auto& poset : oracle::all_posets_labeled(n)) check_poset(poset);
    for (const auto& poset : oracle::poset_representatives(5)) check_poset(poset);
}

TEST_CASE("sigma_prime guard") {
    setenv("ARBOR_SEARCH_GUARD", "50", 1);
    finite_poset big(7, [] {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) pairs.push_back({a, b});
        return pairs;
    }());
    CHECK_THROWS_AS(sigma_prime(big), error); // 2^7 - 1 chains > 50
    unsetenv("ARBOR_SEARCH_GUARD");
    CHECK(sigma_prime(big).tree.size() == 128);
}

TEST_CASE("tree and poset JSON round trips") {
    finite_tree tree = gen_wq(3, 2);
    json j = tree_to_json(tree);
    CHECK(tree_from_json(j).parents() == tree.parents());
    CHECK(j["format_version"] == 1);

    finite_poset poset(3, {{0, 1}, {1, 2}, {0, 2}});
    json pj = poset_to_json(poset);
    finite_poset back = poset_from_json(pj);
    CHECK(back.size() == 3);
    CHECK(back.less_pairs() == poset.less_pairs());

    CHECK_THROWS_AS(tree_from_json(json{{"parent", "zzz"}}), error);

    std::string dot = tree_to_dot(gen_path(2));
    CHECK(dot.find("0 -> 1") != std::string::npos);
}
