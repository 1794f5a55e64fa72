// Fixed edges, normal components and the two lower bounds on cf.

#ifndef HEXFORCE_BOUNDS_HPP_
#define HEXFORCE_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "edge_set.hpp"
#include "forcing.hpp"
#include "graph.hpp"
#include "hexgrid.hpp"

namespace hexforce {

struct FixedEdgeReport {
  EdgeSet fixed_double;  // in every perfect matching
  EdgeSet fixed_single;  // in no perfect matching
  EdgeSet free;
};

// Throws NoPerfectMatching (as do the next four).
FixedEdgeReport fixed_edges(const HexSystem& hs);

// No fixed edges.
bool is_normal(const HexSystem& hs);
// Every hexagon boundary is a nice cycle.
bool faces_are_nice(const HexSystem& hs);

// Components of the free-edge subgraph as hexagonal systems, ordered by
// their smallest center.
std::vector<HexSystem> normal_components(const HexSystem& hs);

// Sum of the exact cf over the normal components.
int cf_by_decomposition(const HexSystem& hs, int max_dim = kMaxCycleSpaceDim);

// n + 1.  Throws NotNormal.
int lower_bound_hexagons(const HexSystem& hs);

// Classes of the closure of "same frame of one hexagon", ordered by their
// least edge.  hexagon_sets[i] lists the hexagons with a frame in class i.
struct EdgeClassPartition {
  std::vector<EdgeSet> classes;
  std::vector<std::vector<int>> hexagon_sets;
  int k() const { return static_cast<int>(classes.size()); }
};

EdgeClassPartition edge_class_partition(const HexSystem& hs);

// Dual subgraph of one class: its hexagons, joined across the inner edges
// of the class.  Graph vertex i is hexagons[i]; graph edge j crosses
// crossed[j].
struct DualSubgraph {
  std::vector<int> hexagons;
  Graph graph;
  std::vector<int> crossed;
};

std::vector<DualSubgraph> dual_subgraphs(const HexSystem& hs, const EdgeClassPartition& p);

// 2n minus the summed matching numbers of the dual subgraphs.  Throws
// NotNormal.
int lower_bound_matching(const HexSystem& hs);

// |V| - nu(g).  Throws IsolatedVertex.
int edge_cover_number(const Graph& g);

struct BoundsReport {
  int n = 0;
  bool normal = false;
  int k = 0;
  std::vector<int> class_hexagons;  // |H_i|
  std::vector<int> class_matching;  // nu of each dual subgraph
  std::optional<int> hexagon_bound;
  std::optional<int> matching_bound;
  Direction parallel_direction = Direction::Vert;
  int parallel_bound = 0;
};

BoundsReport bounds_report(const HexSystem& hs);
std::string format_report(const BoundsReport& r);

} // namespace hexforce

#endif
