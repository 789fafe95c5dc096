#ifndef ARBOR_IO_HPP
#define ARBOR_IO_HPP

#include "arbor/coloring.hpp"
#include "arbor/goodsets.hpp"
#include "arbor/ideal.hpp"
#include "arbor/tree.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace arbor {

using nlohmann::json;

inline constexpr int format_version = 1;

// {"format_version":1,"parent":[null,0,0,...]}
json tree_to_json(const finite_tree& tree);
finite_tree tree_from_json(const json& j);

// {"format_version":1,"less":[[i,j],...],"n":k}
json poset_to_json(const finite_poset& poset);
finite_poset poset_from_json(const json& j);

std::string tree_to_dot(const finite_tree& tree);

// CSV rows `u,v,color` with u below v, one row per comparable pair; a
// leading `# k=<colors>` line makes the file self-contained.  Loading
// validates rows against the ambient structure.
void write_coloring_csv(std::ostream& out, const pair_coloring& coloring);
pair_coloring read_coloring_csv(std::istream& in, const strict_order& order,
                                std::optional<int> k = std::nullopt);

// leaf -> node index; internal level -> [color, block, block, ...]
json decomposition_to_json(const good_decomposition& d);
good_decomposition decomposition_from_json(const json& j);

// "0,2,5" -> {0,2,5}; empty string -> the empty set
node_set parse_node_list(const std::string& text, int universe);

// family spec grammar: `mspecial:<m>`, `principal:<set>`,
// `gens:<set>;<set>;...`
family parse_family_spec(const std::string& spec, const finite_tree& tree);

json node_set_to_json(const node_set& s);

std::string dump_json(const json& j);
json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace arbor

#endif
