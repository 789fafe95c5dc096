#include "arbor/io.hpp"

#include "arbor/errors.hpp"

#include <fstream>
#include <sstream>

namespace arbor {

json tree_to_json(const finite_tree& tree) {
    json parents = json::array();
    for (int p : tree.parents()) {
        if (p == finite_tree::none)
            parents.push_back(nullptr);
        else
            parents.push_back(p);
    }
    return json{{"format_version", format_version}, {"parent", parents}};
}

finite_tree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("parent") || !j["parent"].is_array())
        fail(errc::parse_error, "tree JSON needs a \"parent\" array");
    std::vector<int> parents;
    for (const auto& entry : j["parent"]) {
        if (entry.is_null())
            parents.push_back(finite_tree::none);
        else if (entry.is_number_integer())
            parents.push_back(entry.get<int>());
        else
            fail(errc::parse_error, "parent entries must be integers or null");
    }
    return finite_tree(parents);
}

json poset_to_json(const finite_poset& poset) {
    json less = json::array();
    for (auto [a, b] : poset.less_pairs()) less.push_back(json::array({a, b}));
    return json{{"format_version", format_version}, {"less", less}, {"n", poset.size()}};
}

finite_poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("less"))
        fail(errc::parse_error, "poset JSON needs \"n\" and \"less\"");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& entry : j["less"]) {
        if (!entry.is_array() || entry.size() != 2)
            fail(errc::parse_error, "less entries must be [i,j] pairs");
        pairs.push_back({entry[0].get<int>(), entry[1].get<int>()});
    }
    return finite_poset(j["n"].get<int>(), pairs);
}

std::string tree_to_dot(const finite_tree& tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    for (int t = 0; t < tree.size(); ++t) out << "  " << t << ";\n";
    for (int t = 0; t < tree.size(); ++t)
        if (tree.parent(t) != finite_tree::none)
            out << "  " << tree.parent(t) << " -> " << t << ";\n";
    out << "}\n";
    return out.str();
}

void write_coloring_csv(std::ostream& out, const pair_coloring& coloring) {
    out << "# k=" << coloring.colors() << "\n";
    for (auto [u, v] : coloring.pairs())
        out << u << "," << v << "," << coloring.color(u, v) << "\n";
}

pair_coloring read_coloring_csv(std::istream& in, const strict_order& order,
                                std::optional<int> k) {
    std::vector<std::vector<int>> value(order.n, std::vector<int>(order.n, -1));
    int max_color = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto eq = line.find("k=");
            if (eq != std::string::npos && !k) k = std::stoi(line.substr(eq + 2));
            continue;
        }
        std::istringstream row(line);
        int u, v, c;
        char comma1, comma2;
        if (!(row >> u >> comma1 >> v >> comma2 >> c) || comma1 != ',' || comma2 != ',')
            fail(errc::parse_error, "bad coloring row: " + line);
        if (u < 0 || v < 0 || u >= order.n || v >= order.n)
            fail(errc::parse_error, "coloring row names an unknown node");
        if (!order.less(u, v))
            fail(errc::parse_error, "coloring rows must satisfy u < v in the order");
        if (value[u][v] != -1) fail(errc::parse_error, "duplicate coloring row");
        if (c < 0) fail(errc::parse_error, "colors must be >= 0");
        value[u][v] = c;
        max_color = std::max(max_color, c);
    }
    int colors = k.value_or(max_color + 1);
    if (colors < 1) colors = 1;
    for (auto [u, v] : order.comparable_pairs())
        if (value[u][v] == -1)
            fail(errc::parse_error, "coloring misses the comparable pair {" +
                                        std::to_string(u) + "," + std::to_string(v) + "}");
    return pair_coloring(order, colors, [&](int u, int v) { return value[u][v]; });
}

json decomposition_to_json(const good_decomposition& d) {
    if (d.is_leaf()) return json(d.leaf);
    json out = json::array();
    out.push_back(d.level_color);
    for (const auto& b : d.blocks) out.push_back(decomposition_to_json(b));
    return out;
}

good_decomposition decomposition_from_json(const json& j) {
    good_decomposition d;
    if (j.is_number_integer()) {
        d.leaf = j.get<int>();
        return d;
    }
    if (!j.is_array() || j.size() < 2 || !j[0].is_number_integer())
        fail(errc::parse_error, "decomposition must be a node index or [color, blocks...]");
    d.level_color = j[0].get<int>();
    for (std::size_t i = 1; i < j.size(); ++i)
        d.blocks.push_back(decomposition_from_json(j[i]));
    return d;
}

node_set parse_node_list(const std::string& text, int universe) {
    node_set out(universe);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        if (!item.empty()) {
            int v;
            try {
                v = std::stoi(item);
            } catch (...) {
                fail(errc::parse_error, "bad node index: " + item);
            }
            if (v < 0 || v >= universe)
                fail(errc::parse_error, "node index out of range: " + item);
            out.insert(v);
        }
        pos = comma + 1;
    }
    return out;
}

family parse_family_spec(const std::string& spec, const finite_tree& tree) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail(errc::parse_error, "family spec needs the form kind:arguments");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "mspecial") {
        int m;
        try {
            m = std::stoi(rest);
        } catch (...) {
            fail(errc::parse_error, "mspecial needs an integer budget");
        }
        return family::make_m_special(tree, m);
    }
    if (kind == "principal")
        return family::make_principal(tree.size(), parse_node_list(rest, tree.size()));
    if (kind == "gens") {
        std::vector<node_set> gens;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t semi = rest.find(';', pos);
            if (semi == std::string::npos) semi = rest.size();
            gens.push_back(parse_node_list(rest.substr(pos, semi - pos), tree.size()));
            pos = semi + 1;
        }
        return family::make_generated(tree.size(), std::move(gens));
    }
    fail(errc::parse_error, "unknown family kind: " + kind);
}

json node_set_to_json(const node_set& s) {
    json out = json::array();
    for (int v : s.members()) out.push_back(v);
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::parse_error, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(errc::parse_error, "cannot write " + path);
    out << dump_json(j);
}

} // namespace arbor
