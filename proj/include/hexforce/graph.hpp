// Small undirected multigraph used for dual subgraphs and matching tests.

#ifndef HEXFORCE_GRAPH_HPP_
#define HEXFORCE_GRAPH_HPP_

#include <utility>
#include <vector>

namespace hexforce {

class Graph {
public:
  struct Arc {
    int to;
    int edge;
  };

  explicit Graph(int n = 0) : adj_(static_cast<std::size_t>(n)) {}

  int add_vertex();
  // Returns the new edge id.  Self loops are rejected.
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Arc>& arcs(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  static Graph path(int n);
  static Graph cycle(int n);

private:
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

} // namespace hexforce

#endif
