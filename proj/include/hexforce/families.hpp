// Parallelogram, regular hexagon and the two rectangle-shaped families,
// their optimal complete forcing sets and closed-form forcing numbers.
//
// Rows are numbered from 1 bottom to top and columns from 1 left to right;
// row i sits at cy = 3(i-1).

#ifndef HEXFORCE_FAMILIES_HPP_
#define HEXFORCE_FAMILIES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edge_set.hpp"
#include "hexgrid.hpp"

namespace hexforce {

enum class Family { Parallelogram, Hexagon, OblateRect, ProlateRect };

std::string_view to_string(Family f);
// Accepts parallelogram, hexagon, oblate, prolate.  Throws InvalidSpec.
Family parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Parallelogram;
  int p = 1;
  int q = 1;  // unused for Hexagon
};

std::string to_string(const FamilySpec& s);

// Throws InvalidSpec when p or q is out of range; rectangles need p odd,
// and a prolate rectangle with p > 1 needs q >= 2.
void validate(const FamilySpec& s);

struct RowCol {
  int i;
  int j;
  friend auto operator<=>(const RowCol&, const RowCol&) = default;
};

struct FamilyInstance {
  HexSystem hs;
  std::map<RowCol, HexCenter> index;
};

FamilyInstance generate(const FamilySpec& s);

int formula_cf(const FamilySpec& s);

// The explicit construction, as the union `edges` of the blocks in `cuts`.
// For the parallelogram, hexagon and oblate families every block is an
// e-cut of the whole system; for the prolate family each block is a cut of
// one normal component.
struct Construction {
  EdgeSet edges;
  std::vector<EdgeSet> cuts;
};

Construction construct_cfs(const FamilySpec& s);

enum class BoundKind { Hexagons, Matching, Components };
std::string_view to_string(BoundKind b);

struct Certificate {
  FamilySpec spec;
  int n = 0;
  int construction_size = 0;
  bool construction_complete = false;
  int formula = 0;
  std::optional<int> hexagon_bound;   // absent for systems with fixed edges
  std::optional<int> matching_bound;
  int component_bound = 0;            // summed hexagon bound of the normal components
  BoundKind applicable = BoundKind::Hexagons;
  int bound = 0;
  bool optimal = false;
};

// Upper bound by the verified construction, lower bound by the bound the
// family calls for; optimal when the two meet.
Certificate certify(const FamilySpec& s);
std::string format_certificate(const Certificate& c);

} // namespace hexforce

#endif
