#pragma once

// Small flow kernels backing the exact oracle and the capacity feasibility
// check: a min-cost circulation with arc lower bounds (lower-bound
// elimination, then successive shortest augmenting paths), and a plain Dinic
// max-flow for feasibility-only questions. Sizes stay small by design; the
// oracle is guarded.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace linematch::flow {

template <class Cost>
class CirculationNetwork {
 public:
  explicit CirculationNetwork(int node_count) : n_(node_count), excess_(node_count, 0) {}

  struct ArcSpec {
    int from = 0, to = 0;
    long long lower = 0, upper = 0;
    Cost cost = Cost(0);
  };

  int add_arc(int from, int to, long long lower, long long upper, Cost cost) {
    ArcSpec spec{from, to, lower, upper, cost};
    specs_.push_back(spec);
    excess_[to] += lower;
    excess_[from] -= lower;
    arc_edge_.push_back(static_cast<int>(edges_.size()));
    push_edge(from, to, upper - lower, cost);
    return static_cast<int>(specs_.size()) - 1;
  }

  // Returns true iff a feasible circulation exists; on success the flow on
  // each arc is min-cost among feasible circulations (all costs nonnegative).
  bool solve_min_cost() {
    const int src = n_, snk = n_ + 1;
    long long need = 0;
    std::vector<int> helper_first(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
      if (excess_[v] > 0) {
        helper_first[v] = static_cast<int>(edges_.size());
        push_edge(src, v, excess_[v], Cost(0));
        need += excess_[v];
      } else if (excess_[v] < 0) {
        push_edge(v, snk, -excess_[v], Cost(0));
      }
    }
    long long sent = min_cost_max_flow(src, snk, need);
    return sent == need;
  }

  long long flow_on(int arc_id) const {
    int e = arc_edge_[arc_id];
    return specs_[arc_id].lower + edges_[e].flow;
  }

  int node_count() const { return n_; }
  const std::vector<ArcSpec>& arcs() const { return specs_; }

 private:
  struct Edge {
    int to;
    long long cap;
    long long flow;
    Cost cost;
  };

  void push_edge(int from, int to, long long cap, Cost cost) {
    adj_.resize(std::max<std::size_t>(adj_.size(), static_cast<std::size_t>(n_) + 2));
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap, 0, cost});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, 0, -cost});
  }

  long long min_cost_max_flow(int src, int snk, long long limit) {
    const int nodes = n_ + 2;
    long long sent = 0;
    std::vector<Cost> dist;
    std::vector<int> pred_edge;
    while (sent < limit) {
      // Bellman-Ford on the residual graph; deterministic and safe with the
      // negative reverse arcs.
      dist.assign(nodes, std::numeric_limits<Cost>::max());
      pred_edge.assign(nodes, -1);
      dist[src] = Cost(0);
      bool any = true;
      for (int round = 0; round < nodes && any; ++round) {
        any = false;
        for (int v = 0; v < nodes; ++v) {
          if (dist[v] == std::numeric_limits<Cost>::max()) continue;
          for (int e : adj_[v]) {
            const Edge& ed = edges_[e];
            if (ed.cap - ed.flow <= 0) continue;
            Cost cand = dist[v] + ed.cost;
            if (cand < dist[ed.to]) {
              dist[ed.to] = cand;
              pred_edge[ed.to] = e;
              any = true;
            }
          }
        }
      }
      if (pred_edge[snk] < 0) break;
      long long push = limit - sent;
      for (int v = snk; v != src;) {
        const Edge& ed = edges_[pred_edge[v]];
        push = std::min(push, ed.cap - ed.flow);
        v = edges_[pred_edge[v] ^ 1].to;
      }
      for (int v = snk; v != src;) {
        edges_[pred_edge[v]].flow += push;
        edges_[pred_edge[v] ^ 1].flow -= push;
        v = edges_[pred_edge[v] ^ 1].to;
      }
      sent += push;
    }
    return sent;
  }

  int n_;
  std::vector<ArcSpec> specs_;
  std::vector<int> arc_edge_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<long long> excess_;
};

class Dinic {
 public:
  explicit Dinic(int node_count) : adj_(node_count) {}

  void add_edge(int from, int to, long long cap) {
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  long long max_flow(int src, int snk) {
    long long total = 0;
    while (bfs(src, snk)) {
      iter_.assign(adj_.size(), 0);
      long long f;
      while ((f = dfs(src, snk, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    long long cap;
  };

  bool bfs(int src, int snk) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[src] = 0;
    q.push(src);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : adj_[v]) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[snk] >= 0;
  }

  long long dfs(int v, int snk, long long limit) {
    if (v == snk) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      int e = adj_[v][i];
      Edge& ed = edges_[e];
      if (ed.cap <= 0 || level_[ed.to] != level_[v] + 1) continue;
      long long got = dfs(ed.to, snk, std::min(limit, ed.cap));
      if (got > 0) {
        ed.cap -= got;
        edges_[e ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace linematch::flow
