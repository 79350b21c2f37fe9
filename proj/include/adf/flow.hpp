#pragma once

#include <cstdint>
#include <vector>

namespace adf {

// Dinic max-flow on small integer-capacity networks. Used for the
// degree-constrained subgraph and matching reductions.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  // Returns an id usable with flow_on().
  int add_edge(int from, int to, int capacity);
  std::int64_t max_flow(int source, int sink);
  int flow_on(int edge_id) const;
  // Nodes reachable from the source in the residual network after max_flow().
  std::vector<bool> source_side(int source) const;

 private:
  struct Link {
    int to;
    int rev;
    int cap;
    int original;
  };

  bool build_levels(int source, int sink);
  int push(int node, int sink, int limit);

  std::vector<std::vector<Link>> graph_;
  std::vector<std::pair<int, int>> handles_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace adf
