// arbor: batch front end for the finite partition-calculus workbench.
// One concern per subcommand; composition happens through files.
#include "arbor/coloring.hpp"
#include "arbor/errors.hpp"
#include "arbor/goodsets.hpp"
#include "arbor/hierarchy.hpp"
#include "arbor/ideal.hpp"
#include "arbor/io.hpp"
#include "arbor/ordinal.hpp"
#include "arbor/ramsey.hpp"
#include "arbor/tree.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace arbor;

namespace {

struct options {
    std::string kind, mode, op;
    std::string tree_path, poset_path, coloring_path, sets_path, decomp_path;
    std::string out, dot_out, maxmap_out, witness_out, verify_path;
    std::string set_text, chain_text, perm_text, goals_text, g_text, sigma_text;
    std::string ordinal_a, ordinal_b, ordinal_xi;
    std::vector<std::string> base_specs;
    std::string s0_text = "*";
    std::string sigma_set_text = "*";
    int n = 0, branching = 2, levels = 3, wq_m = 2, wq_d = 2;
    int node = 0, color = 0, m = 1, k = 2, rho = 2, xi = 1, workers = 1, depth = -1;
    int sweep = 0;
    long long verify_rho = 0, verify_xi = 0;
    std::uint64_t seed = 0;
    bool have_family = false;
    std::string family_spec;
};

void emit(const options& opt, const json& payload) {
    if (opt.out.empty())
        std::cout << dump_json(payload);
    else
        write_json_file(opt.out, payload);
}

finite_tree load_tree(const std::string& path) {
    return tree_from_json(load_json_file(path));
}

finite_poset load_poset(const std::string& path) {
    return poset_from_json(load_json_file(path));
}

strict_order load_order(const options& opt) {
    if (!opt.tree_path.empty()) return order_view(load_tree(opt.tree_path));
    if (!opt.poset_path.empty()) return order_view(load_poset(opt.poset_path));
    fail(errc::invalid_argument, "need --tree or --poset");
}

pair_coloring load_coloring(const options& opt, const strict_order& order) {
    std::ifstream in(opt.coloring_path);
    if (!in) fail(errc::parse_error, "cannot open " + opt.coloring_path);
    return read_coloring_csv(in, order);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

json regressive_to_json(const finite_tree& tree, const regressive_map& f) {
    json assignment = json::array();
    for (int t = 0; t < tree.size(); ++t) {
        if (f.domain.contains(t))
            assignment.push_back(f.assignment[t]);
        else
            assignment.push_back(nullptr);
    }
    return json{{"assignment", assignment}, {"domain", node_set_to_json(f.domain)}};
}

int run_gen(const options& opt) {
    finite_tree tree = [&] {
        if (opt.kind == "path") return gen_path(opt.n);
        if (opt.kind == "complete") return gen_complete(opt.branching, opt.levels);
        if (opt.kind == "wq") return gen_wq(opt.wq_m, opt.wq_d);
        if (opt.kind == "random") return gen_random(opt.n, opt.seed);
        fail(errc::param_out_of_range, "unknown kind: " + opt.kind);
    }();
    write_json_file(opt.out, tree_to_json(tree));
    if (!opt.dot_out.empty()) {
        std::ofstream dot(opt.dot_out);
        dot << tree_to_dot(tree);
    }
    return 0;
}

int run_color(const options& opt) {
    pair_coloring coloring = [&]() -> pair_coloring {
        if (opt.mode == "galvin") {
            finite_tree tree = load_tree(opt.tree_path);
            return galvin_coloring(tree, depth_specializing_map(tree));
        }
        if (opt.mode == "sierpinski") {
            std::vector<int> perm = parse_int_list(opt.perm_text);
            if (!opt.tree_path.empty()) {
                // pull the permutation coloring back through depth labels
                finite_tree tree = load_tree(opt.tree_path);
                if (static_cast<int>(perm.size()) != tree.height())
                    fail(errc::not_a_permutation,
                         "permutation length must equal the tree height");
                pair_coloring on_path = sierpinski_coloring(tree.height(), perm);
                return pair_coloring(order_view(tree), 2, [&](int x, int y) {
                    return on_path.color(tree.depth(x), tree.depth(y));
                });
            }
            return sierpinski_coloring(static_cast<int>(perm.size()), perm);
        }
        if (opt.mode == "random") return random_coloring(load_order(opt), opt.k, opt.seed);
        fail(errc::param_out_of_range, "unknown mode: " + opt.mode);
    }();
    std::ofstream out(opt.out);
    if (!out) fail(errc::parse_error, "cannot write " + opt.out);
    write_coloring_csv(out, coloring);
    return 0;
}

int run_chi(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    pair_coloring coloring = load_coloring(opt, order_view(tree));
    node_set slice = c_chi(coloring, opt.node, opt.color);
    emit(opt, json{{"format_version", format_version},
                   {"node", opt.node},
                   {"color", opt.color},
                   {"set", node_set_to_json(slice)}});
    return 0;
}

int run_diag(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    json spec = load_json_file(opt.sets_path);
    if (!spec.contains("sets") || !spec["sets"].is_array())
        fail(errc::parse_error, "sets file needs a \"sets\" array");
    std::vector<node_set> sets;
    for (const auto& entry : spec["sets"]) {
        node_set s(tree.size());
        for (const auto& v : entry) s.insert(v.get<int>());
        sets.push_back(s);
    }
    node_set result = diag_union(tree, sets);
    emit(opt, json{{"format_version", format_version}, {"set", node_set_to_json(result)}});
    return 0;
}

int run_nsmember(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    node_set x = parse_node_list(opt.set_text, tree.size());
    diag_membership result =
        opt.have_family
            ? in_diag_ideal(tree, x, parse_family_spec(opt.family_spec, tree))
            : ns_member(tree, x, opt.m);
    json payload{{"format_version", format_version}, {"member", result.member}};
    payload["witness"] =
        result.witness ? regressive_to_json(tree, *result.witness) : json(nullptr);
    emit(opt, payload);
    return 0;
}

int run_cover(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    node_set x = parse_node_list(opt.set_text, tree.size());
    antichain_cover result = special_cover(tree, x);
    json cover = json::array();
    for (const auto& level : result.cover) cover.push_back(node_set_to_json(level));
    emit(opt, json{{"format_version", format_version},
                   {"cover", cover},
                   {"min_count", result.min_count}});
    return 0;
}

int run_arrow(const options& opt) {
    strict_order order = load_order(opt);
    arrow_goal goal{parse_int_list(opt.goals_text)};

    if (opt.sweep > 0) {
        // symmetric-goal sweep for exploring how shape moves the threshold
        json rows = json::array();
        for (int g = 2; g <= opt.sweep; ++g) {
            arrow_goal symmetric{std::vector<int>(goal.goals.size(), g)};
            auto start = std::chrono::steady_clock::now();
            arrow_verdict verdict = arrows_decide(order, symmetric, opt.workers);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            rows.push_back(json{{"goal", g},
                                {"holds", verdict.holds},
                                {"elapsed_ms", elapsed},
                                {"colorings_examined", verdict.colorings_examined}});
        }
        emit(opt, json{{"format_version", format_version}, {"sweep", rows}});
        return 0;
    }

    auto start = std::chrono::steady_clock::now();
    arrow_verdict verdict = arrows_decide(order, goal, opt.workers);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    json payload{{"format_version", format_version},
                 {"holds", verdict.holds},
                 {"elapsed_ms", elapsed},
                 {"colorings_examined", verdict.colorings_examined},
                 {"witness_coloring_path", nullptr}};
    if (verdict.witness_coloring && !opt.witness_out.empty()) {
        std::ofstream out(opt.witness_out);
        if (!out) fail(errc::parse_error, "cannot write " + opt.witness_out);
        write_coloring_csv(out, *verdict.witness_coloring);
        payload["witness_coloring_path"] = opt.witness_out;
    }
    if (verdict.witness_chain) {
        payload["witness_chain"] = node_set_to_json(verdict.witness_chain->first);
        payload["witness_chain_color"] = verdict.witness_chain->second;
    }
    emit(opt, payload);
    return 0;
}

int run_maxchain(const options& opt) {
    strict_order order = load_order(opt);
    pair_coloring coloring = load_coloring(opt, order);
    homog_chain result = max_homog_chain(coloring, opt.color);
    emit(opt, json{{"format_version", format_version},
                   {"length", result.length},
                   {"chain", node_set_to_json(result.chain)}});
    return 0;
}

json decomposition_file(const good_decomposition& d, int rho, const color_seq& sigma) {
    json sigma_json = json::array();
    for (int c : sigma) sigma_json.push_back(c);
    return json{{"format_version", format_version},
                {"rho", rho},
                {"sigma", sigma_json},
                {"blocks", decomposition_to_json(d)}};
}

int run_good(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    pair_coloring coloring = load_coloring(opt, order_view(tree));

    if (!opt.verify_path.empty()) {
        json file = load_json_file(opt.verify_path);
        good_decomposition d = decomposition_from_json(file.at("blocks"));
        color_seq sigma;
        for (const auto& c : file.at("sigma")) sigma.push_back(c.get<int>());
        bool valid = is_good(coloring, d, file.at("rho").get<int>(), sigma);
        std::cout << dump_json(json{{"format_version", format_version},
                                    {"verdict", valid ? "valid" : "invalid"}});
        return valid ? 0 : 1;
    }

    node_set chain = parse_node_list(opt.chain_text, tree.size());
    color_seq sigma;
    for (int c : parse_int_list(opt.sigma_text)) sigma.push_back(c);
    auto built = build_good(coloring, chain, opt.rho, sigma);
    json payload{{"format_version", format_version}, {"found", built.has_value()}};
    if (built) {
        payload["verified"] = is_good(coloring, *built, opt.rho, sigma);
        if (!opt.out.empty()) {
            write_json_file(opt.out, decomposition_file(*built, opt.rho, sigma));
            payload["path"] = opt.out;
        }
    }
    std::cout << dump_json(payload);
    return 0;
}

int run_refine(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    pair_coloring coloring = load_coloring(opt, order_view(tree));
    json file = load_json_file(opt.decomp_path);
    good_decomposition d = decomposition_from_json(file.at("blocks"));
    color_seq sigma;
    for (const auto& c : file.at("sigma")) sigma.push_back(c.get<int>());

    std::vector<int> g = parse_int_list(opt.g_text);
    if (static_cast<int>(g.size()) != tree.size())
        fail(errc::invalid_argument, "--g must list one value per tree node");

    refine_result refined = refine_good(d, coloring, g, opt.xi, opt.m);
    if (!opt.out.empty())
        write_json_file(opt.out, decomposition_file(refined.refined, opt.xi, sigma));
    std::cout << dump_json(
        json{{"format_version", format_version},
             {"g_color", refined.g_color},
             {"verified", is_good(coloring, refined.refined, opt.xi, sigma)},
             {"path", opt.out.empty() ? json(nullptr) : json(opt.out)}});
    return 0;
}

int run_hier(const options& opt) {
    finite_tree tree = load_tree(opt.tree_path);
    pair_coloring coloring = load_coloring(opt, order_view(tree));
    const int n = tree.size();

    if (static_cast<int>(opt.base_specs.size()) != n)
        fail(errc::invalid_argument,
             "need exactly one --base spec per node (" + std::to_string(n) + ")");
    std::vector<family> base;
    bool all_principal = true;
    for (const auto& spec : opt.base_specs) {
        base.push_back(parse_family_spec(spec, tree));
        all_principal = all_principal && base.back().which() == family::kind::principal;
    }

    node_set s0 =
        opt.s0_text == "*" ? node_set::full(n) : parse_node_list(opt.s0_text, n);
    hierarchy h({tree, coloring, base, s0});

    const int k = coloring.colors();
    const int depth = opt.depth < 0 ? k : opt.depth;
    json levels = json::array();
    for (const auto& level : h.s_sequence(depth)) levels.push_back(node_set_to_json(level));

    node_set sigma_s =
        opt.sigma_set_text == "*" ? s0 : parse_node_list(opt.sigma_set_text, n);
    json sigma_tables = json::object();
    for (int t : sigma_s.members()) {
        json list = json::array();
        for (const auto& sigma : h.sigma_set(t, sigma_s)) {
            json entry = json::array();
            for (int c : sigma) entry.push_back(c);
            list.push_back(entry);
        }
        sigma_tables[std::to_string(t)] = list;
    }

    // identity checks across every subset of every pred(t) at |sigma| <= 2
    bool subset_ok = true;
    bool equality_ok = true;
    std::vector<color_seq> sigmas = {{}};
    for (int c = 0; c < k; ++c) sigmas.push_back({c});
    if (k >= 2)
        for (int c1 = 0; c1 < k; ++c1)
            for (int c2 = 0; c2 < k; ++c2) sigmas.push_back({c1, c2});
    for (int t = 0; t < n; ++t) {
        if (tree.pred(t).size() > 16) continue;
        for (const auto& sigma : sigmas) {
            if (!h.s_sequence(static_cast<int>(sigma.size())).back().contains(t)) continue;
            auto pred_nodes = tree.pred(t).members();
            for (std::uint64_t pick = 0; pick < (1ULL << pred_nodes.size()); ++pick) {
                node_set x(n);
                for (std::size_t i = 0; i < pred_nodes.size(); ++i)
                    if ((pick >> i) & 1u) x.insert(pred_nodes[i]);
                bool in_j = h.in_j(t, sigma, x);
                bool in_all = true;
                for (int i = 0; i < k; ++i) {
                    color_seq extended = sigma;
                    extended.push_back(i);
                    in_all = in_all && h.in_i(t, extended, x);
                }
                if (in_j && !in_all) subset_ok = false;
                if (in_j != in_all) equality_ok = false;
            }
        }
    }

    emit(opt, json{{"format_version", format_version},
                   {"levels", levels},
                   {"sigma", sigma_tables},
                   {"identities",
                    json{{"j_subset_of_intersection", subset_ok},
                         {"j_equals_intersection", equality_ok},
                         {"all_bases_principal", all_principal}}}});
    return 0;
}

int run_sigmaprime(const options& opt) {
    finite_poset poset = load_poset(opt.poset_path);
    sigma_prime_result result = sigma_prime(poset);
    write_json_file(opt.out, tree_to_json(result.tree));
    if (!opt.maxmap_out.empty()) {
        json mm = json::array();
        for (int v : result.max_map)
            mm.push_back(v == finite_tree::none ? json(nullptr) : json(v));
        write_json_file(opt.maxmap_out,
                        json{{"format_version", format_version}, {"max_map", mm}});
    }
    if (!opt.dot_out.empty()) {
        std::ofstream dot(opt.dot_out);
        dot << tree_to_dot(result.tree);
    }
    return 0;
}

int run_ord(const options& opt) {
    json payload{{"format_version", format_version}};
    if (opt.op == "compare") {
        order rel = ord_compare(parse_ordinal(opt.ordinal_a), parse_ordinal(opt.ordinal_b));
        payload["result"] = rel == order::less    ? "less"
                            : rel == order::equal ? "equal"
                                                  : "greater";
    } else if (opt.op == "add") {
        payload["result"] = format_ordinal(
            ord_add(parse_ordinal(opt.ordinal_a), parse_ordinal(opt.ordinal_b)));
    } else if (opt.op == "indecomposable") {
        payload["result"] = is_indecomposable(parse_ordinal(opt.ordinal_a));
    } else if (opt.op == "goal") {
        payload["result"] =
            format_ordinal(pigeonhole_goal(parse_ordinal(opt.ordinal_xi), opt.m));
    } else if (opt.op == "verify") {
        payload["result"] = verify_pigeonhole_finite(opt.verify_rho, opt.verify_xi, opt.m);
    } else {
        fail(errc::param_out_of_range, "unknown op: " + opt.op);
    }
    emit(opt, payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbor: finite partition calculus on trees and posets"};
    app.require_subcommand(1);
    options opt;

    auto* gen = app.add_subcommand("gen", "generate a tree");
    gen->add_option("--kind", opt.kind)
        ->required()
        ->check(CLI::IsMember({"path", "complete", "wq", "random"}));
    gen->add_option("--n", opt.n);
    gen->add_option("--branching", opt.branching);
    gen->add_option("--levels", opt.levels);
    gen->add_option("--m", opt.wq_m);
    gen->add_option("--d", opt.wq_d);
    gen->add_option("--seed", opt.seed);
    gen->add_option("-o,--out", opt.out)->required();
    gen->add_option("--dot", opt.dot_out);

    auto* color = app.add_subcommand("color", "build a pair coloring");
    color->add_option("--mode", opt.mode)
        ->required()
        ->check(CLI::IsMember({"galvin", "sierpinski", "random"}));
    color->add_option("--tree", opt.tree_path);
    color->add_option("--poset", opt.poset_path);
    color->add_option("--perm", opt.perm_text);
    color->add_option("--k", opt.k);
    color->add_option("--seed", opt.seed);
    color->add_option("-o,--out", opt.out)->required();

    auto* chi = app.add_subcommand("chi", "predecessors of a node joined by one color");
    chi->add_option("--tree", opt.tree_path)->required();
    chi->add_option("--coloring", opt.coloring_path)->required();
    chi->add_option("--node", opt.node)->required();
    chi->add_option("--color", opt.color)->required();
    chi->add_option("-o,--out", opt.out);

    auto* diag = app.add_subcommand("diag", "diagonal union of a node-indexed family");
    diag->add_option("--tree", opt.tree_path)->required();
    diag->add_option("--sets", opt.sets_path)->required();
    diag->add_option("-o,--out", opt.out);

    auto* nsm = app.add_subcommand("nsmember", "nonstationary membership with witness");
    nsm->add_option("--tree", opt.tree_path)->required();
    nsm->add_option("--set", opt.set_text)->required();
    nsm->add_option("--m", opt.m);
    nsm->add_option("--family", opt.family_spec);
    nsm->add_option("-o,--out", opt.out);

    auto* cover = app.add_subcommand("cover", "optimal antichain cover");
    cover->add_option("--tree", opt.tree_path)->required();
    cover->add_option("--set", opt.set_text)->required();
    cover->add_option("-o,--out", opt.out);

    auto* arrow = app.add_subcommand("arrow", "decide the partition relation");
    arrow->add_option("--tree", opt.tree_path);
    arrow->add_option("--poset", opt.poset_path);
    arrow->add_option("--goals", opt.goals_text)->required();
    arrow->add_option("--workers", opt.workers);
    arrow->add_option("--sweep", opt.sweep);
    arrow->add_option("--witness-out", opt.witness_out);
    arrow->add_option("-o,--out", opt.out);

    auto* maxchain = app.add_subcommand("maxchain", "maximum homogeneous chain");
    maxchain->add_option("--tree", opt.tree_path);
    maxchain->add_option("--poset", opt.poset_path);
    maxchain->add_option("--coloring", opt.coloring_path)->required();
    maxchain->add_option("--color", opt.color)->required();
    maxchain->add_option("-o,--out", opt.out);

    auto* good = app.add_subcommand("good", "build or verify a good decomposition");
    good->add_option("--tree", opt.tree_path)->required();
    good->add_option("--coloring", opt.coloring_path)->required();
    good->add_option("--chain", opt.chain_text);
    good->add_option("--rho", opt.rho);
    good->add_option("--sigma", opt.sigma_text);
    good->add_option("--verify", opt.verify_path);
    good->add_option("-o,--out", opt.out);

    auto* refine = app.add_subcommand("refine", "pigeonhole refinement of a decomposition");
    refine->add_option("--tree", opt.tree_path)->required();
    refine->add_option("--coloring", opt.coloring_path)->required();
    refine->add_option("--decomp", opt.decomp_path)->required();
    refine->add_option("--g", opt.g_text)->required();
    refine->add_option("--xi", opt.xi)->required();
    refine->add_option("--m", opt.m)->required();
    refine->add_option("-o,--out", opt.out);

    auto* hier = app.add_subcommand("hier", "I/J ideal hierarchy report");
    hier->add_option("--tree", opt.tree_path)->required();
    hier->add_option("--coloring", opt.coloring_path)->required();
    hier->add_option("--base", opt.base_specs);
    hier->add_option("--s0", opt.s0_text);
    hier->add_option("--depth", opt.depth);
    hier->add_option("--set", opt.sigma_set_text);
    hier->add_option("-o,--out", opt.out);

    auto* sigmaprime = app.add_subcommand("sigmaprime", "tree of chains of a poset");
    sigmaprime->add_option("--poset", opt.poset_path)->required();
    sigmaprime->add_option("-o,--out", opt.out)->required();
    sigmaprime->add_option("--maxmap-out", opt.maxmap_out);
    sigmaprime->add_option("--dot", opt.dot_out);

    auto* ord = app.add_subcommand("ord", "ordinal arithmetic");
    ord->add_option("--op", opt.op)
        ->required()
        ->check(CLI::IsMember({"compare", "add", "indecomposable", "goal", "verify"}));
    ord->add_option("--a", opt.ordinal_a);
    ord->add_option("--b", opt.ordinal_b);
    ord->add_option("--xi", opt.ordinal_xi);
    ord->add_option("--m", opt.m);
    ord->add_option("--rho", opt.verify_rho);
    ord->add_option("--xi-finite", opt.verify_xi);
    ord->add_option("-o,--out", opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    opt.have_family = nsm->count("--family") > 0;

    try {
        if (gen->parsed()) return run_gen(opt);
        if (color->parsed()) return run_color(opt);
        if (chi->parsed()) return run_chi(opt);
        if (diag->parsed()) return run_diag(opt);
        if (nsm->parsed()) return run_nsmember(opt);
        if (cover->parsed()) return run_cover(opt);
        if (arrow->parsed()) return run_arrow(opt);
        if (maxchain->parsed()) return run_maxchain(opt);
        if (good->parsed()) return run_good(opt);
        if (refine->parsed()) return run_refine(opt);
        if (hier->parsed()) return run_hier(opt);
        if (sigmaprime->parsed()) return run_sigmaprime(opt);
        if (ord->parsed()) return run_ord(opt);
    } catch (const error& e) {
        std::cerr << dump_json(json{{"error", errc_name(e.code())}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        std::cerr << dump_json(json{{"error", "Internal"}, {"message", e.what()}});
        return 1;
    }
    return 2;
}
