#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "rig/coloring.hpp"
#include "rig/graph.hpp"
#include "rig/hyperbolicity.hpp"
#include "rig/sparsity.hpp"

namespace rig {

// Bipartite text format: header "bipartite <n> <m>", then one line
// "a <attr> <node>" per incidence, attribute-major ascending.
// Graph text format: header "graph <n>", then "e <u> <v>" with u < v,
// ascending. Writers emit the canonical order; readers are strict about
// headers, ranges, and u < v, and reject anything else with
// std::runtime_error.
void write_bipartite(const BipartiteGraph& b, std::ostream& out);
BipartiteGraph read_bipartite(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);

void write_bipartite_file(const BipartiteGraph& b, const std::string& path);
BipartiteGraph read_bipartite_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

// Flat JSON object: degeneracy, max_attribute_degree (null when built
// without attribute data), grad0_num, grad0_den, degree_tail ([d, fraction]
// pairs).
nlohmann::json to_json(const SparsityReport& r);

// delta_num (delta doubled), component_size, special_k, certificate (null
// when no special path was found), witness (present only with a path).
nlohmann::json to_json(const HyperbolicityReport& r);

nlohmann::json to_json(const VerificationRecord& r);

// k, num_colors, colors, verification.
nlohmann::json to_json(const ColoringResult& r);
ColoringResult coloring_from_json(const nlohmann::json& j);

// Shortest round-trip decimal form, for deterministic CSV output.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace rig
