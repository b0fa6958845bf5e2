#pragma once

// Successive-shortest-path min-cost max-flow over an arbitrary ordered cost
// group. Used with exact scalars, so every augmentation is exact; with
// lexicographic cost vectors it solves lexicographic transportation problems
// without weight scaling.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fdist/scalar.hpp"

namespace fdist::detail {

template <std::size_t N>
struct LexCost {
  std::array<std::int64_t, N> v{};

  friend LexCost operator+(const LexCost& a, const LexCost& b) {
    LexCost r;
    for (std::size_t i = 0; i < N; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
  }
  LexCost operator-() const {
    LexCost r;
    for (std::size_t i = 0; i < N; ++i) r.v[i] = -v[i];
    return r;
  }
  friend auto operator<=>(const LexCost&, const LexCost&) = default;
};

template <Scalar T, class Cost>
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  // Returns an edge handle usable with flow_on().
  std::pair<std::size_t, std::size_t> add_edge(std::size_t from, std::size_t to, T cap, Cost cost) {
    adj_[from].push_back({to, cap, T(0), cost, adj_[to].size()});
    adj_[to].push_back({from, T(0), T(0), -cost, adj_[from].size() - 1});
    return {from, adj_[from].size() - 1};
  }

  T flow_on(std::pair<std::size_t, std::size_t> handle) const { return adj_[handle.first][handle.second].flow; }

  // Maximum flow of minimum cost among maximum flows.
  T run(std::size_t source, std::size_t sink) {
    T total(0);
    const std::size_t n = adj_.size();
    for (;;) {
      std::vector<std::optional<Cost>> dist(n);
      std::vector<std::pair<std::size_t, std::size_t>> via(n, {n, 0});
      dist[source] = Cost{};
      // Bellman-Ford; the residual graph never holds a negative cycle.
      for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < n; ++u) {
          if (!dist[u]) continue;
          for (std::size_t k = 0; k < adj_[u].size(); ++k) {
            const Edge& e = adj_[u][k];
            if (!residual_positive(e)) continue;
            Cost candidate = *dist[u] + e.cost;
            if (!dist[e.to] || candidate < *dist[e.to]) {
              dist[e.to] = candidate;
              via[e.to] = {u, k};
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!dist[sink]) return total;

      std::optional<T> bottleneck;
      for (std::size_t v = sink; v != source; v = via[v].first) {
        const Edge& e = adj_[via[v].first][via[v].second];
        T room = e.cap - e.flow;
        if (!bottleneck || room < *bottleneck) bottleneck = room;
      }
      for (std::size_t v = sink; v != source; v = via[v].first) {
        Edge& e = adj_[via[v].first][via[v].second];
        e.flow += *bottleneck;
        adj_[e.to][e.rev].flow -= *bottleneck;
      }
      total += *bottleneck;
    }
  }

 private:
  struct Edge {
    std::size_t to;
    T cap;
    T flow;
    Cost cost;
    std::size_t rev;
  };

  static bool residual_positive(const Edge& e) { return approx_lt(T(0), e.cap - e.flow); }

  std::vector<std::vector<Edge>> adj_;
};

// Transportation plan from rows (supplies) to columns (demands) over the
// allowed cells, maximizing shipped mass and then minimizing cost.
template <Scalar T, class Cost>
std::vector<std::vector<T>> transport(const std::vector<T>& supply, const std::vector<T>& demand,
                                      const std::vector<std::vector<std::optional<Cost>>>& cost) {
  const std::size_t rows = supply.size();
  const std::size_t cols = demand.size();
  const std::size_t source = rows + cols;
  const std::size_t sink = source + 1;
  FlowNetwork<T, Cost> net(sink + 1);
  for (std::size_t i = 0; i < rows; ++i) net.add_edge(source, i, supply[i], Cost{});
  for (std::size_t j = 0; j < cols; ++j) net.add_edge(rows + j, sink, demand[j], Cost{});
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> handles(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[i][j]) handles[i].push_back(net.add_edge(i, rows + j, supply[i], *cost[i][j]));
      else handles[i].push_back({sink + 1, 0});
  net.run(source, sink);

  std::vector<std::vector<T>> plan(rows, std::vector<T>(cols, T(0)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (handles[i][j].first <= sink) plan[i][j] = net.flow_on(handles[i][j]);
  return plan;
}

}  // namespace fdist::detail
