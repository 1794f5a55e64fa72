// Exact minimum hitting set by branch and bound.

#ifndef HEXFORCE_HITTING_SET_HPP_
#define HEXFORCE_HITTING_SET_HPP_

#include <cstddef>
#include <vector>

#include "edge_set.hpp"

namespace hexforce {

struct HittingSetResult {
  std::size_t size = 0;
  EdgeSet witness;
};

// Constraints with no element make the instance infeasible (Internal
// error).  The witness is the lexicographically least optimal set.
HittingSetResult minimum_hitting_set(std::size_t universe, std::vector<EdgeSet> constraints);

// Drops duplicates and constraints that contain another constraint.
std::vector<EdgeSet> minimal_constraints(std::vector<EdgeSet> constraints);

} // namespace hexforce

#endif
