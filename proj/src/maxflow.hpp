#pragma once

#include <algorithm>
#include <limits>
#include <vector>

// Dinic max-flow on long long capacities; private helper of the densest
// subgraph computation.
namespace rig::detail {

class Dinic {
 public:
  explicit Dinic(int n) : graph_(n), level_(n), iter_(n) {}

  void add_edge(int from, int to, long long cap) {
    graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      for (;;) {
        long long f = dfs(s, t, std::numeric_limits<long long>::max());
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  // After max_flow: vertices reachable from s in the residual network.
  std::vector<char> min_cut_side(int s) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : graph_[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    long long cap;
    int rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> frontier{s};
    level_[s] = 0;
    while (!frontier.empty() && level_[t] < 0) {
      std::vector<int> next;
      for (int v : frontier)
        for (const Arc& a : graph_[v])
          if (a.cap > 0 && level_[a.to] < 0) {
            level_[a.to] = level_[v] + 1;
            next.push_back(a.to);
          }
      frontier.swap(next);
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Arc& a = graph_[v][i];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      long long got = dfs(a.to, t, std::min(limit, a.cap));
      if (got > 0) {
        a.cap -= got;
        graph_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace rig::detail
