#include <hexforce/graph.hpp>

#include <hexforce/error.hpp>

namespace hexforce {

int Graph::add_vertex() {
  adj_.emplace_back();
  return num_vertices() - 1;
}

int Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    fail(ErrorKind::Internal, "bad edge endpoints");
  int id = num_edges();
  edges_.emplace_back(u, v);
  adj_[u].push_back({v, id});
  adj_[v].push_back({u, id});
  return id;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3)
    g.add_edge(n - 1, 0);
  return g;
}

} // namespace hexforce
