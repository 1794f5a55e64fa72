// Perfect matchings (Kekulé structures) and forcing sets.

#ifndef HEXFORCE_MATCHINGS_HPP_
#define HEXFORCE_MATCHINGS_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "edge_set.hpp"
#include "graph.hpp"
#include "hexgrid.hpp"

namespace hexforce {

// Edge ids of g, ascending.
using Matching = std::vector<int>;

// Maximum cardinality matching (Edmonds' blossom algorithm); handles odd
// cycles, so it is safe on any graph.
Matching max_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

// The vertex/edge graph of a hexagonal system; vertex and edge ids coincide
// with the HexSystem indices.
Graph to_graph(const HexSystem& hs);

// Restriction of a hexagonal system used by the matching routines: vertices
// flagged in `removed` and edges in `forbidden` are absent.  Either may be
// left empty.
struct Restriction {
  std::vector<char> removed;
  std::optional<EdgeSet> forbidden;

  bool vertex_removed(int v) const { return !removed.empty() && removed[v]; }
  bool edge_blocked(int e) const { return forbidden && forbidden->contains(e); }
};

// A perfect matching of the restricted system, if any (bipartite
// augmenting paths).
std::optional<EdgeSet> find_perfect_matching(const HexSystem& hs, const Restriction& r = {});
bool has_perfect_matching(const HexSystem& hs, const Restriction& r = {});

// Number of perfect matchings of the restricted system, counting stops at
// `limit`.
std::size_t count_perfect_matchings(const HexSystem& hs, const Restriction& r = {},
                                    std::size_t limit = std::numeric_limits<std::size_t>::max());

// All perfect matchings, ordered lexicographically by ascending edge list.
// Throws LimitExceeded when more than `limit` exist.
std::vector<EdgeSet> enumerate_perfect_matchings(
    const HexSystem& hs, std::size_t limit = std::numeric_limits<std::size_t>::max());

bool is_perfect_matching(const HexSystem& hs, const EdgeSet& m);

// True iff m is the only perfect matching containing f.  Throws
// NotAMatching when m is not a perfect matching and NotASubset when f ⊄ m.
bool is_forcing_set(const HexSystem& hs, const EdgeSet& m, const EdgeSet& f);

} // namespace hexforce

#endif
