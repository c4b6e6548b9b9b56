#include "rig/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rig {

void write_bipartite(const BipartiteGraph& b, std::ostream& out) {
  out << "bipartite " << b.n << ' ' << b.m << '\n';
  for (int a = 0; a < b.m; ++a)
    for (int v : b.attr_nodes[a]) out << "a " << a << ' ' << v << '\n';
}

BipartiteGraph read_bipartite(std::istream& in) {
  std::string tag;
  int n = 0, m = 0;
  if (!(in >> tag) || tag != "bipartite" || !(in >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("bad bipartite header");
  BipartiteGraph b(n, m);
  while (in >> tag) {
    int a = 0, v = 0;
    if (tag != "a" || !(in >> a >> v)) throw std::runtime_error("bad incidence line");
    if (a < 0 || a >= m || v < 0 || v >= n)
      throw std::runtime_error("incidence out of range");
    b.add_incidence(a, v);
  }
  b.finalize();
  return b;
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "graph " << g.n << '\n';
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) out << "e " << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "graph" || !(in >> n) || n < 0)
    throw std::runtime_error("bad graph header");
  Graph g(n);
  while (in >> tag) {
    int u = 0, v = 0;
    if (tag != "e" || !(in >> u >> v)) throw std::runtime_error("bad edge line");
    if (u < 0 || v >= n || u >= v) throw std::runtime_error("edge must satisfy 0 <= u < v < n");
    g.add_edge(u, v);
  }
  g.finalize();
  return g;
}

void write_bipartite_file(const BipartiteGraph& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_bipartite(b, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

BipartiteGraph read_bipartite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_bipartite(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_graph(g, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_graph(in);
}

nlohmann::json to_json(const SparsityReport& r) {
  nlohmann::json j;
  j["degeneracy"] = r.degeneracy;
  if (r.has_attribute_stats)
    j["max_attribute_degree"] = r.max_attribute_degree;
  else
    j["max_attribute_degree"] = nullptr;
  j["grad0_num"] = r.grad0.num;
  j["grad0_den"] = r.grad0.den;
  nlohmann::json tail = nlohmann::json::array();
  for (const auto& [d, frac] : r.degree_tail) tail.push_back({d, frac});
  j["degree_tail"] = tail;
  return j;
}

nlohmann::json to_json(const HyperbolicityReport& r) {
  nlohmann::json j;
  j["delta_num"] = r.four_point_delta.twice;
  j["component_size"] = r.component_size;
  if (r.best_special_k)
    j["special_k"] = *r.best_special_k;
  else
    j["special_k"] = nullptr;
  if (r.certificate)
    j["certificate"] = *r.certificate;
  else
    j["certificate"] = nullptr;
  if (r.witness_path) j["witness"] = *r.witness_path;
  return j;
}

nlohmann::json to_json(const VerificationRecord& r) {
  nlohmann::json j;
  j["class_subset"] = r.class_subset;
  j["induced_size"] = r.induced_size;
  j["claimed_bound"] = r.claimed_bound;
  if (r.measure == VerificationRecord::Measure::exact)
    j["measured_treewidth"] = r.treewidth;
  else
    j["measured_treewidth"] = r.measured_str();
  j["pass"] = r.pass;
  return j;
}

nlohmann::json to_json(const ColoringResult& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["num_colors"] = r.num_colors;
  j["colors"] = r.colors;
  nlohmann::json recs = nlohmann::json::array();
  for (const VerificationRecord& rec : r.verification) recs.push_back(to_json(rec));
  j["verification"] = recs;
  return j;
}

ColoringResult coloring_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("coloring must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "k" && key != "num_colors" && key != "colors" && key != "verification")
      throw std::invalid_argument("unknown coloring key: " + key);
  }
  ColoringResult r;
  r.k = j.at("k").get<int>();
  r.num_colors = j.at("num_colors").get<int>();
  r.colors = j.at("colors").get<std::vector<int>>();
  if (r.k < 1) throw std::invalid_argument("coloring parameter must be at least 1");
  int max_color = -1;
  for (int c : r.colors) {
    if (c < 0) throw std::invalid_argument("negative color id");
    max_color = std::max(max_color, c);
  }
  if (r.num_colors != max_color + 1)
    throw std::invalid_argument("num_colors does not match the color ids");
  return r;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

}  // namespace rig
