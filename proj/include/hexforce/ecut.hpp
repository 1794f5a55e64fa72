// Elementary edge cuts (e-cuts) and complete forcing sets built from them.
//
// D is an e-cut when H - D has exactly two components and every edge of D
// has its black end in one component (the black bank) and its white end in
// the other.  Equivalently the dual edges crossing D form one cycle of the
// dual graph, with the same color condition.

#ifndef HEXFORCE_ECUT_HPP_
#define HEXFORCE_ECUT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"
#include "forcing.hpp"
#include "hexgrid.hpp"

namespace hexforce {

struct EdgeCutSet {
  EdgeSet edges;
  std::vector<int> black_bank;  // vertex indices, ascending
  std::vector<int> white_bank;
};

// The banks of d when it is an e-cut.
std::optional<EdgeCutSet> ecut_banks(const HexSystem& hs, const EdgeSet& d);
bool is_ecut(const HexSystem& hs, const EdgeSet& d);
bool is_ecut_dual(const HexSystem& hs, const EdgeSet& d);

// Every hexagon boundary and the peripheral cycle meet some cut.  Throws
// NotAnECut naming the first invalid index.
bool is_ecut_cover(const HexSystem& hs, const std::vector<EdgeSet>& cuts);

// Thrown by cfs_from_ecuts; carries a nice cycle that avoids every cut.
class UncoveredCycleError : public Error {
public:
  explicit UncoveredCycleError(NiceCycle c, const std::string& msg)
    : Error(ErrorKind::UncoveredNiceCycle, msg), cycle_(std::move(c)) {}
  const NiceCycle& cycle() const { return cycle_; }
private:
  NiceCycle cycle_;
};

struct CutForcingResult {
  EdgeSet edges;  // union of the cuts
  bool is_cover = false;
  std::optional<std::string> warning;
};

// Union of e-cuts that meet every nice cycle.  Throws NotAnECut and
// UncoveredCycleError.
CutForcingResult cfs_from_ecuts(const HexSystem& hs, const std::vector<EdgeSet>& cuts);

// Smallest direction class (ties in the order Vert, Pos, Neg); it is a
// complete forcing set.  Throws NoPerfectMatching.
std::pair<Direction, EdgeSet> parallel_class_bound(const HexSystem& hs);

} // namespace hexforce

#endif
