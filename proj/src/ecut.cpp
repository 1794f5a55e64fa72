#include <hexforce/ecut.hpp>

#include <numeric>

#include <hexforce/bounds.hpp>
#include <hexforce/matchings.hpp>

namespace hexforce {

namespace {

// Component label of every vertex of hs - d, and the component count.
std::pair<std::vector<int>, int> components_without(const HexSystem& hs, const EdgeSet& d) {
  std::vector<int> comp(hs.num_vertices(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < hs.num_vertices(); ++s) {
    if (comp[s] >= 0)
      continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : hs.incident_edges(v)) {
        if (d.contains(e))
          continue;
        int w = hs.other_end(e, v);
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return {comp, count};
}

// Side of the black end of every cut edge, or -1 when the ends do not
// separate or the black ends are split.
int black_side(const HexSystem& hs, const EdgeSet& d, const std::vector<int>& comp) {
  int side = -1;
  bool ok = true;
  d.for_each([&](int e) {
    auto [a, b] = hs.endpoints(e);
    if (hs.color(a) != Color::Black)
      std::swap(a, b);
    if (comp[a] == comp[b] || (side >= 0 && comp[a] != side))
      ok = false;
    side = comp[a];
  });
  return ok ? side : -1;
}

} // namespace

std::optional<EdgeCutSet> ecut_banks(const HexSystem& hs, const EdgeSet& d) {
  if (d.empty())
    return std::nullopt;
  auto [comp, count] = components_without(hs, d);
  if (count != 2)
    return std::nullopt;
  int side = black_side(hs, d, comp);
  if (side < 0)
    return std::nullopt;
  EdgeCutSet cut{d, {}, {}};
  for (int v = 0; v < hs.num_vertices(); ++v)
    (comp[v] == side ? cut.black_bank : cut.white_bank).push_back(v);
  return cut;
}

bool is_ecut(const HexSystem& hs, const EdgeSet& d) {
  return ecut_banks(hs, d).has_value();
}

bool is_ecut_dual(const HexSystem& hs, const EdgeSet& d) {
  if (d.empty())
    return false;
  DualGraph dual(hs);
  const int nd = dual.num_vertices();
  std::vector<int> degree(nd, 0);
  std::vector<int> parent(nd);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  int touched = 0, merged = 0;
  for (const DualEdge& de : dual.edges()) {
    if (!d.contains(de.edge))
      continue;
    if (degree[de.a]++ == 0)
      ++touched;
    if (degree[de.b]++ == 0)
      ++touched;
    int ra = find(de.a), rb = find(de.b);
    if (ra != rb) {
      parent[ra] = rb;
      ++merged;
    }
  }
  for (int x = 0; x < nd; ++x)
    if (degree[x] != 0 && degree[x] != 2)
      return false;
  if (merged != touched - 1)
    return false;
  // D* is one cycle, so H - D has an inside and an outside; the color
  // condition is read off those two sides.
  auto [comp, count] = components_without(hs, d);
  if (count != 2)
    fail(ErrorKind::Internal, "dual cycle does not split the system in two");
  return black_side(hs, d, comp) >= 0;
}

bool is_ecut_cover(const HexSystem& hs, const std::vector<EdgeSet>& cuts) {
  EdgeSet all = hs.empty_set();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!is_ecut(hs, cuts[i]))
      fail(ErrorKind::NotAnECut, "cut " + std::to_string(i) + " is not an e-cut");
    all |= cuts[i];
  }
  for (int h = 0; h < hs.num_hexagons(); ++h)
    if (!hs.hexagon_boundary(h).intersects(all))
      return false;
  for (int e : peripheral_cycle(hs).edges)
    if (all.contains(e))
      return true;
  return false;
}

CutForcingResult cfs_from_ecuts(const HexSystem& hs, const std::vector<EdgeSet>& cuts) {
  CutForcingResult res{hs.empty_set(), false, std::nullopt};
  res.is_cover = is_ecut_cover(hs, cuts);
  for (const EdgeSet& c : cuts)
    res.edges |= c;
  EdgeSet rest = hs.all_edges() - res.edges;
  if (auto w = find_nice_cycle(hs, rest, rest)) {
    std::string msg = "nice cycle through " + std::to_string(w->cycle.vertices.size()) +
                      " vertices avoids every cut";
    throw UncoveredCycleError(std::move(w->cycle), msg);
  }
  if (!is_complete_forcing_set_nice(hs, res.edges))
    fail(ErrorKind::Internal, "union of e-cuts is not a complete forcing set");
  if (!res.is_cover && is_normal(hs))
    res.warning = "the system is normal but the cuts do not form an e-cut cover";
  return res;
}

std::pair<Direction, EdgeSet> parallel_class_bound(const HexSystem& hs) {
  if (!has_perfect_matching(hs))
    fail(ErrorKind::NoPerfectMatching, "the system has no perfect matching");
  std::pair<Direction, EdgeSet> best{Direction::Vert, direction_class(hs, Direction::Vert)};
  for (Direction d : {Direction::Pos, Direction::Neg}) {
    EdgeSet c = direction_class(hs, d);
    if (c.size() < best.second.size())
      best = {d, std::move(c)};
  }
  return best;
}

} // namespace hexforce
