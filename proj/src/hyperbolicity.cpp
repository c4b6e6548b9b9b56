#include "rig/hyperbolicity.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "rig/errors.hpp"

namespace rig {

namespace {

std::vector<int> pick_vertices(const Graph& g, const std::optional<int>& component,
                               int size_cap) {
  ComponentLabeling labeling = components(g);
  std::vector<int> verts;
  if (component) {
    if (*component < 0 || *component >= labeling.count())
      throw std::invalid_argument("no such component");
    verts = component_vertices(labeling, *component);
  } else {
    if (labeling.count() > 1)
      throw std::invalid_argument("graph is disconnected; specify a component");
    verts.resize(g.n);
    for (int v = 0; v < g.n; ++v) verts[v] = v;
  }
  if (static_cast<int>(verts.size()) > size_cap)
    throw CapExceeded("four-point delta: vertex set larger than the size cap");
  return verts;
}

std::vector<std::vector<std::uint32_t>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> dist(g.n);
  for (int v = 0; v < g.n; ++v) dist[v] = bfs_distances(g, v);
  return dist;
}

struct DistPair {
  int d = 0;
  int i = 0;
  int j = 0;
};

}  // namespace

HalfInteger four_point_delta(const Graph& g, std::optional<int> component, int size_cap) {
  std::vector<int> verts = pick_vertices(g, component, size_cap);
  int sz = static_cast<int>(verts.size());
  if (sz < 4) return {0};
  Graph sub = induced_subgraph(g, verts);
  auto dist = all_pairs_distances(sub);

  // Only pairs with no strictly farther neighbor extension can form the
  // largest-sum pairing of a maximizing quadruple.
  auto far_apart = [&](int i, int j) {
    std::uint32_t d = dist[i][j];
    for (int u : sub.adj[j])
      if (dist[i][u] > d) return false;
    for (int u : sub.adj[i])
      if (dist[j][u] > d) return false;
    return true;
  };

  std::vector<DistPair> pairs;
  for (int i = 0; i < sz; ++i)
    for (int j = i + 1; j < sz; ++j)
      if (far_apart(i, j)) pairs.push_back({static_cast<int>(dist[i][j]), i, j});
  std::sort(pairs.begin(), pairs.end(),
            [](const DistPair& a, const DistPair& b) { return a.d > b.d; });

  // best holds twice the delta. For a quadruple whose largest pairing sum
  // uses pair distances d1 >= d2, twice the delta is at most d2, so the
  // scan over sorted pairs can stop as soon as distances reach best.
  int best = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    if (pairs[a].d <= best) break;
    int x = pairs[a].i, y = pairs[a].j;
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (pairs[b].d <= best) break;
      int z = pairs[b].i, w = pairs[b].j;
      if (z == x || z == y || w == x || w == y) continue;
      int s1 = pairs[a].d + pairs[b].d;
      int s2 = static_cast<int>(dist[x][z] + dist[y][w]);
      int s3 = static_cast<int>(dist[x][w] + dist[y][z]);
      best = std::max(best, s1 - std::max(s2, s3));
    }
  }
  return {best};
}

HalfInteger four_point_delta_naive(const Graph& g, std::optional<int> component,
                                   int size_cap) {
  std::vector<int> verts = pick_vertices(g, component, size_cap);
  int sz = static_cast<int>(verts.size());
  if (sz < 4) return {0};
  Graph sub = induced_subgraph(g, verts);
  auto dist = all_pairs_distances(sub);

  int best = 0;
  for (int a = 0; a < sz; ++a)
    for (int b = a + 1; b < sz; ++b)
      for (int c = b + 1; c < sz; ++c)
        for (int d = c + 1; d < sz; ++d) {
          int s1 = static_cast<int>(dist[a][b] + dist[c][d]);
          int s2 = static_cast<int>(dist[a][c] + dist[b][d]);
          int s3 = static_cast<int>(dist[a][d] + dist[b][c]);
          int hi = std::max({s1, s2, s3});
          int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          best = std::max(best, hi - mid);
        }
  return {best};
}

std::vector<SpecialPath> find_k_special_paths(const Graph& g) {
  std::vector<SpecialPath> out;
  std::vector<char> used(g.n, 0);

  auto other_neighbor = [&](int v, int prev) {
    return g.adj[v][0] == prev ? g.adj[v][1] : g.adj[v][0];
  };

  // Endpoints stay connected after the internals go away?
  auto has_second_path = [&](int from, int to, const std::vector<int>& path) {
    std::vector<char> blocked(g.n, 0);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) blocked[path[i]] = 1;
    std::vector<char> seen(g.n, 0);
    std::vector<int> frontier{from};
    seen[from] = 1;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier)
        for (int u : g.adj[v]) {
          if (blocked[u] || seen[u]) continue;
          if (u == to) return true;
          seen[u] = 1;
          next.push_back(u);
        }
      frontier = std::move(next);
    }
    return false;
  };

  // Chains reachable from an anchor (any vertex of degree != 2).
  for (int a = 0; a < g.n; ++a) {
    if (g.degree(a) == 2) continue;
    for (int first : g.adj[a]) {
      if (g.degree(first) != 2 || used[first]) continue;
      std::vector<int> path{a, first};
      int prev = a, cur = first;
      while (true) {
        used[cur] = 1;
        int next = other_neighbor(cur, prev);
        path.push_back(next);
        if (g.degree(next) != 2) break;
        prev = cur;
        cur = next;
      }
      bool closed = path.back() == a;
      if (!closed && !has_second_path(a, path.back(), path)) continue;
      out.push_back({static_cast<int>(path.size()) - 1, std::move(path), closed});
    }
  }

  // Leftover degree-2 vertices form pure cycle components. Start each walk
  // at its smallest vertex, toward the smaller neighbor.
  for (int s = 0; s < g.n; ++s) {
    if (g.degree(s) != 2 || used[s]) continue;
    std::vector<int> path{s};
    used[s] = 1;
    int prev = s, cur = g.adj[s][0];
    while (cur != s) {
      used[cur] = 1;
      path.push_back(cur);
      int next = other_neighbor(cur, prev);
      prev = cur;
      cur = next;
    }
    path.push_back(s);
    out.push_back({static_cast<int>(path.size()) - 1, std::move(path), true});
  }
  return out;
}

int certificate_from_special_path(int k) {
  if (k < 1) throw std::invalid_argument("path must have at least one edge");
  return k / 4;
}

HyperbolicityReport hyperbolicity_report(const Graph& g, int size_cap) {
  HyperbolicityReport rep;
  if (g.n == 0) return rep;

  ComponentLabeling labeling = components(g);
  std::vector<int> giant = component_vertices(labeling, labeling.giant);
  if (static_cast<int>(giant.size()) <= size_cap) {
    rep.four_point_delta = four_point_delta(g, labeling.giant, size_cap);
    rep.component_size = static_cast<int>(giant.size());
  } else {
    // Deterministic ball: BFS from the highest-degree vertex of the giant
    // (ties to the lowest index), truncated at size_cap in discovery order.
    int root = giant[0];
    for (int v : giant)
      if (g.degree(v) > g.degree(root)) root = v;
    std::vector<char> seen(g.n, 0);
    std::vector<int> ball{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < ball.size() && static_cast<int>(ball.size()) < size_cap;
         ++head)
      for (int u : g.adj[ball[head]]) {
        if (seen[u]) continue;
        seen[u] = 1;
        ball.push_back(u);
        if (static_cast<int>(ball.size()) == size_cap) break;
      }
    Graph sub = induced_subgraph(g, ball);
    rep.four_point_delta = four_point_delta(sub, std::nullopt, size_cap);
    rep.component_size = static_cast<int>(ball.size());
  }

  for (const SpecialPath& sp : find_k_special_paths(g))
    if (!rep.best_special_k || sp.k > *rep.best_special_k) {
      rep.best_special_k = sp.k;
      rep.certificate = certificate_from_special_path(sp.k);
      rep.witness_path = sp.vertices;
    }
  return rep;
}

ExposedGraph exposed_giant(const BipartiteGraph& b, std::span<const int> removed_nodes,
                           std::span<const int> removed_attrs) {
  std::vector<char> node_out(b.n, 0), attr_out(b.m, 0);
  for (int v : removed_nodes) {
    if (v < 0 || v >= b.n) throw std::invalid_argument("removed node out of range");
    node_out[v] = 1;
  }
  for (int a : removed_attrs) {
    if (a < 0 || a >= b.m) throw std::invalid_argument("removed attribute out of range");
    attr_out[a] = 1;
  }

  ExposedGraph ex;
  std::vector<int> new_index(b.n, -1);
  for (int v = 0; v < b.n; ++v)
    if (!node_out[v]) {
      new_index[v] = static_cast<int>(ex.original_node.size());
      ex.original_node.push_back(v);
    }

  std::vector<std::pair<int, int>> edges;
  std::vector<int> kept;
  for (int a = 0; a < b.m; ++a) {
    if (attr_out[a]) continue;
    kept.clear();
    for (int v : b.attr_nodes[a])
      if (!node_out[v]) kept.push_back(new_index[v]);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = i + 1; j < kept.size(); ++j) edges.emplace_back(kept[i], kept[j]);
  }
  ex.graph = Graph::from_edges(static_cast<int>(ex.original_node.size()), edges);
  ex.labeling = components(ex.graph);
  return ex;
}

SpecialBipartiteCheck check_k_special_bipartite(const BipartiteGraph& b,
                                                const BipartitePathQuery& q) {
  std::vector<char> in_x(b.n, 0), in_y(b.m, 0);
  for (int v : q.removed_nodes) {
    if (v < 0 || v >= b.n) throw InvalidQuery("removed node out of range");
    in_x[v] = 1;
  }
  for (int a : q.removed_attrs) {
    if (a < 0 || a >= b.m) throw InvalidQuery("removed attribute out of range");
    in_y[a] = 1;
  }

  std::size_t len = q.path.size();
  if (len < 3 || len % 2 == 0)
    throw InvalidQuery("path must alternate attribute, node, ..., attribute");
  for (std::size_t i = 0; i < len; ++i) {
    int v = q.path[i];
    if (i % 2 == 0) {
      if (v < 0 || v >= b.m) throw InvalidQuery("path attribute out of range");
      bool endpoint = i == 0 || i + 1 == len;
      if (endpoint && in_y[v]) throw InvalidQuery("endpoint attribute is removed");
      if (!endpoint && !in_y[v]) throw InvalidQuery("interior attribute not removed");
    } else {
      if (v < 0 || v >= b.n) throw InvalidQuery("path node out of range");
      if (!in_x[v]) throw InvalidQuery("path node not removed");
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; j += 2)
      if (q.path[i] == q.path[j]) throw InvalidQuery("path repeats a vertex");
  for (std::size_t i = 0; i + 1 < len; ++i) {
    int attr = q.path[i % 2 == 0 ? i : i + 1];
    int node = q.path[i % 2 == 0 ? i + 1 : i];
    if (!b.has_incidence(attr, node)) throw InvalidQuery("path entries are not adjacent");
  }

  ExposedGraph ex = exposed_giant(b, q.removed_nodes, q.removed_attrs);
  if (q.component < 0 || q.component >= ex.labeling.count())
    throw InvalidQuery("no such exposed component");

  auto x_neighbors = [&](int attr) {
    std::vector<int> r;
    for (int v : b.attr_nodes[attr])
      if (in_x[v]) r.push_back(v);
    return r;
  };

  // (i) the endpoint attributes reach X only through the path.
  if (x_neighbors(q.path[0]) != std::vector<int>{q.path[1]} ||
      x_neighbors(q.path[len - 1]) != std::vector<int>{q.path[len - 2]})
    return {false, "i"};

  // (ii) interior attributes see nothing but their path neighbors.
  for (std::size_t i = 2; i + 2 < len; i += 2) {
    std::vector<int> want{q.path[i - 1], q.path[i + 1]};
    std::sort(want.begin(), want.end());
    if (b.attr_nodes[q.path[i]] != want) return {false, "ii"};
  }

  // (iii) the attributes a path node shares with other nodes are exactly
  // its two path neighbors.
  for (std::size_t i = 1; i < len; i += 2) {
    std::vector<int> shared;
    for (int a : b.node_attrs[q.path[i]])
      if (b.attr_nodes[a].size() >= 2) shared.push_back(a);
    std::vector<int> want{q.path[i - 1], q.path[i + 1]};
    std::sort(want.begin(), want.end());
    if (shared != want) return {false, "iii"};
  }

  // Both endpoint attributes must touch the chosen exposed component.
  std::vector<int> new_index(b.n, -1);
  for (std::size_t i = 0; i < ex.original_node.size(); ++i)
    new_index[ex.original_node[i]] = static_cast<int>(i);
  auto touches = [&](int attr) {
    for (int v : b.attr_nodes[attr])
      if (!in_x[v] && ex.labeling.label[new_index[v]] == q.component) return true;
    return false;
  };
  if (!touches(q.path[0]) || !touches(q.path[len - 1])) return {false, "component-adjacency"};
  return {true, ""};
}

}  // namespace rig
