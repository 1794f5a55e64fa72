// Nice cycles, complete forcing sets and the complete forcing number.
//
// A cycle C is nice when the system minus V(C) still has a perfect
// matching.  A set S of edges is a complete forcing set iff it meets both
// frames (the two perfect matchings) of every nice cycle; three independent
// verifiers are provided: the nice-cycle test, the definition over all
// perfect matchings, and the per-hexagon test valid for catacondensed
// systems.

#ifndef HEXFORCE_FORCING_HPP_
#define HEXFORCE_FORCING_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "edge_set.hpp"
#include "hexgrid.hpp"

namespace hexforce {

struct NiceCycle {
  // Cyclic vertex order starting at the smallest vertex and continuing
  // towards its smaller neighbor on the cycle.
  std::vector<int> vertices;
  EdgeSet edges;
  EdgeSet frame_a;  // holds the smallest edge of the cycle
  EdgeSet frame_b;
};

// Builds the normalized cycle (with frames) from a closed vertex walk.
NiceCycle make_cycle(const HexSystem& hs, const std::vector<int>& walk);

// Default cap on the cycle-space dimension (= number of hexagons for a
// hexagonal system) explored by enumerate_nice_cycles.
inline constexpr int kMaxCycleSpaceDim = 24;

// All nice cycles, sorted by edge set.  Throws NoPerfectMatching, and
// LimitExceeded when the cycle space is larger than 2^max_dim.
std::vector<NiceCycle> enumerate_nice_cycles(const HexSystem& hs,
                                             int max_dim = kMaxCycleSpaceDim);

// Searches for a nice cycle that has one frame inside `frame_allowed` and
// the other frame inside `link_allowed`.  Returns the cycle and the frame
// found inside `frame_allowed`.
struct FrameWitness {
  NiceCycle cycle;
  EdgeSet frame;
};
std::optional<FrameWitness> find_nice_cycle(const HexSystem& hs, const EdgeSet& frame_allowed,
                                            const EdgeSet& link_allowed);

// A nice cycle with a frame disjoint from s, if there is one.
std::optional<FrameWitness> find_unhit_frame(const HexSystem& hs, const EdgeSet& s);

bool is_complete_forcing_set_nice(const HexSystem& hs, const EdgeSet& s);
bool is_complete_forcing_set_def(const HexSystem& hs, const EdgeSet& s);
// Throws NotCatacondensed.
bool is_complete_forcing_set_cata(const HexSystem& hs, const EdgeSet& s);

struct MinForcingResult {
  int cardinality = 0;
  EdgeSet witness;  // lexicographically least optimal set
};

// Exact complete forcing number by hitting all frames of all nice cycles.
MinForcingResult min_complete_forcing(const HexSystem& hs, int max_dim = kMaxCycleSpaceDim);

} // namespace hexforce

#endif
