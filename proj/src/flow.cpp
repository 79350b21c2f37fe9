#include "adf/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace adf {

FlowNetwork::FlowNetwork(int nodes) : graph_(nodes), level_(nodes), cursor_(nodes) {}

int FlowNetwork::add_edge(int from, int to, int capacity) {
  graph_[from].push_back({to, static_cast<int>(graph_[to].size()), capacity, capacity});
  graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0, 0});
  handles_.emplace_back(from, static_cast<int>(graph_[from].size()) - 1);
  return static_cast<int>(handles_.size()) - 1;
}

bool FlowNetwork::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (const Link& l : graph_[u]) {
      if (l.cap > 0 && level_[l.to] < 0) {
        level_[l.to] = level_[u] + 1;
        frontier.push(l.to);
      }
    }
  }
  return level_[sink] >= 0;
}

int FlowNetwork::push(int node, int sink, int limit) {
  if (node == sink) return limit;
  for (auto& i = cursor_[node]; i < graph_[node].size(); ++i) {
    Link& l = graph_[node][i];
    if (l.cap <= 0 || level_[l.to] != level_[node] + 1) continue;
    int pushed = push(l.to, sink, std::min(limit, l.cap));
    if (pushed > 0) {
      l.cap -= pushed;
      graph_[l.to][l.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (int pushed = push(source, sink, std::numeric_limits<int>::max())) total += pushed;
  }
  return total;
}

int FlowNetwork::flow_on(int edge_id) const {
  auto [from, index] = handles_[edge_id];
  const Link& l = graph_[from][index];
  return l.original - l.cap;
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(graph_.size(), false);
  std::queue<int> frontier;
  seen[source] = true;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (const Link& l : graph_[u]) {
      if (l.cap > 0 && !seen[l.to]) {
        seen[l.to] = true;
        frontier.push(l.to);
      }
    }
  }
  return seen;
}

}  // namespace adf
