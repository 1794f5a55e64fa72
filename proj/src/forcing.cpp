#include <hexforce/forcing.hpp>

#include <algorithm>
#include <queue>

#include <hexforce/hitting_set.hpp>
#include <hexforce/matchings.hpp>

namespace hexforce {

namespace {

int edge_between(const HexSystem& hs, int a, int b) {
  for (int e : hs.incident_edges(a))
    if (hs.other_end(e, a) == b)
      return e;
  fail(ErrorKind::Internal, "vertices are not adjacent");
}

void require_perfect_matching(const HexSystem& hs) {
  if (!has_perfect_matching(hs))
    fail(ErrorKind::NoPerfectMatching, "the system has no perfect matching");
}

} // namespace

NiceCycle make_cycle(const HexSystem& hs, const std::vector<int>& walk) {
  const std::size_t n = walk.size();
  auto low = std::min_element(walk.begin(), walk.end()) - walk.begin();
  int next = walk[(low + 1) % n], prev = walk[(low + n - 1) % n];
  NiceCycle c;
  c.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = next < prev ? (low + i) % n : (low + n - i) % n;
    c.vertices.push_back(walk[k]);
  }
  c.edges = c.frame_a = c.frame_b = hs.empty_set();
  for (std::size_t i = 0; i < n; ++i) {
    int e = edge_between(hs, c.vertices[i], c.vertices[(i + 1) % n]);
    c.edges.insert(e);
    (i % 2 == 0 ? c.frame_a : c.frame_b).insert(e);
  }
  if (!c.frame_a.contains(c.edges.first()))
    std::swap(c.frame_a, c.frame_b);
  return c;
}

// ---- enumeration over the cycle space ----------------------------------

std::vector<NiceCycle> enumerate_nice_cycles(const HexSystem& hs, int max_dim) {
  require_perfect_matching(hs);
  const int nv = hs.num_vertices();

  // BFS spanning tree; every non-tree edge closes one fundamental cycle.
  std::vector<int> parent_edge(nv, -1), depth(nv, -1);
  std::queue<int> q;
  q.push(0);
  depth[0] = 0;
  EdgeSet tree = hs.empty_set();
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : hs.incident_edges(v)) {
      int w = hs.other_end(e, v);
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent_edge[w] = e;
        tree.insert(e);
        q.push(w);
      }
    }
  }
  std::vector<std::vector<int>> basis;
  for (int e = 0; e < hs.num_edges(); ++e) {
    if (tree.contains(e))
      continue;
    EdgeSet cyc = hs.empty_set();
    cyc.insert(e);
    auto [a, b] = hs.endpoints(e);
    while (a != b) {
      if (depth[a] < depth[b])
        std::swap(a, b);
      int pe = parent_edge[a];
      cyc.insert(pe);
      a = hs.other_end(pe, a);
    }
    basis.push_back(cyc.to_vector());
  }
  const int dim = static_cast<int>(basis.size());
  if (dim > max_dim)
    fail(ErrorKind::LimitExceeded, "cycle space of dimension " + std::to_string(dim) +
                                       " exceeds the limit " + std::to_string(max_dim));

  // Gray-code walk over all nonzero combinations, tracking vertex degrees.
  EdgeSet current = hs.empty_set();
  std::vector<int> degree(nv, 0);
  int bad = 0;  // vertices whose degree is neither 0 nor 2
  auto bump = [&](int v, int delta) {
    bool was_bad = degree[v] != 0 && degree[v] != 2;
    degree[v] += delta;
    bool is_bad = degree[v] != 0 && degree[v] != 2;
    bad += int(is_bad) - int(was_bad);
  };

  std::vector<NiceCycle> out;
  Restriction r;
  r.removed.assign(nv, 0);
  const std::uint64_t total = std::uint64_t(1) << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto& b = basis[__builtin_ctzll(i)];
    for (int e : b) {
      int delta = current.contains(e) ? -1 : 1;
      if (delta > 0)
        current.insert(e);
      else
        current.erase(e);
      auto [x, y] = hs.endpoints(e);
      bump(x, delta);
      bump(y, delta);
    }
    if (bad != 0)
      continue;
    // walk the component of the first edge; one cycle iff it uses them all
    int e0 = current.first();
    auto [start, v] = hs.endpoints(e0);
    std::vector<int> walk{start};
    int prev = e0;
    while (v != start) {
      walk.push_back(v);
      int nxt = -1;
      for (int e : hs.incident_edges(v))
        if (e != prev && current.contains(e)) {
          nxt = e;
          break;
        }
      prev = nxt;
      v = hs.other_end(nxt, v);
    }
    if (walk.size() != current.size())
      continue;
    for (int x : walk)
      r.removed[x] = 1;
    bool nice = has_perfect_matching(hs, r);
    for (int x : walk)
      r.removed[x] = 0;
    if (nice)
      out.push_back(make_cycle(hs, walk));
  }
  std::sort(out.begin(), out.end(),
            [](const NiceCycle& a, const NiceCycle& b) { return a.edges < b.edges; });
  return out;
}

// ---- targeted search ----------------------------------------------------
//
// Walks the cycle so that frame edges go black -> white and link edges go
// white -> black, starting from the smallest black vertex of the cycle.  A
// perfect matching of the system minus the vertices already paired by
// frame edges is maintained along the way; when it cannot be repaired the
// branch cannot close into a nice cycle.

namespace {

class NiceCycleSearch {
public:
  NiceCycleSearch(const HexSystem& hs, const EdgeSet& frame_allowed, const EdgeSet& link_allowed)
    : hs_(hs), frame_ok_(frame_allowed), link_ok_(link_allowed),
      on_path_(hs.num_vertices(), 0), gone_(hs.num_vertices(), 0),
      seen_(hs.num_vertices(), 0) {}

  std::optional<FrameWitness> run() {
    auto pm = find_perfect_matching(hs_);
    if (!pm)
      fail(ErrorKind::NoPerfectMatching, "the system has no perfect matching");
    mate_.assign(hs_.num_vertices(), -1);
    pm->for_each([&](int e) {
      auto [a, b] = hs_.endpoints(e);
      mate_[a] = b;
      mate_[b] = a;
    });
    for (int b0 = 0; b0 < hs_.num_vertices(); ++b0) {
      if (hs_.color(b0) != Color::Black)
        continue;
      start_ = b0;
      path_.assign(1, b0);
      on_path_[b0] = 1;
      bool found = from_black(b0);
      on_path_[b0] = 0;
      if (found)
        return witness();
    }
    return std::nullopt;
  }

private:
  bool from_black(int b) {
    for (int e : hs_.incident_edges(b)) {
      if (!frame_ok_.contains(e))
        continue;
      int w = hs_.other_end(e, b);
      if (on_path_[w])
        continue;
      std::vector<int> saved = mate_;
      if (remove_pair(b, w)) {
        on_path_[w] = 1;
        path_.push_back(w);
        if (from_white(w))
          return true;
        path_.pop_back();
        on_path_[w] = 0;
      }
      gone_[b] = gone_[w] = 0;
      mate_ = std::move(saved);
    }
    return false;
  }

  bool from_white(int w) {
    for (int e : hs_.incident_edges(w)) {
      if (!link_ok_.contains(e))
        continue;
      int b = hs_.other_end(e, w);
      if (b == start_ && path_.size() >= 4)
        return true;
      if (on_path_[b] || b < start_)
        continue;
      on_path_[b] = 1;
      path_.push_back(b);
      if (from_black(b))
        return true;
      path_.pop_back();
      on_path_[b] = 0;
    }
    return false;
  }

  // Takes b and w out of the maintained matching and repairs it.
  bool remove_pair(int b, int w) {
    gone_[b] = gone_[w] = 1;
    if (mate_[b] == w)
      return true;
    int w0 = mate_[b], b1 = mate_[w];
    mate_[w0] = mate_[b1] = -1;
    ++stamp_;
    return augment(b1, w0);
  }

  bool augment(int b, int target) {
    for (int e : hs_.incident_edges(b)) {
      int x = hs_.other_end(e, b);
      if (gone_[x] || seen_[x] == stamp_)
        continue;
      seen_[x] = stamp_;
      if (x == target || (mate_[x] >= 0 && augment(mate_[x], target))) {
        mate_[b] = x;
        mate_[x] = b;
        return true;
      }
    }
    return false;
  }

  FrameWitness witness() const {
    FrameWitness fw{make_cycle(hs_, path_), hs_.empty_set()};
    for (std::size_t i = 0; i + 1 < path_.size(); i += 2)
      fw.frame.insert(edge_between(hs_, path_[i], path_[i + 1]));
    return fw;
  }

  const HexSystem& hs_;
  const EdgeSet& frame_ok_;
  const EdgeSet& link_ok_;
  std::vector<char> on_path_, gone_;
  std::vector<int> seen_;
  std::vector<int> mate_;
  std::vector<int> path_;
  int start_ = 0;
  int stamp_ = 0;
};

} // namespace

std::optional<FrameWitness> find_nice_cycle(const HexSystem& hs, const EdgeSet& frame_allowed,
                                            const EdgeSet& link_allowed) {
  return NiceCycleSearch(hs, frame_allowed, link_allowed).run();
}

std::optional<FrameWitness> find_unhit_frame(const HexSystem& hs, const EdgeSet& s) {
  EdgeSet all = hs.all_edges();
  return find_nice_cycle(hs, all - s, all);
}

bool is_complete_forcing_set_nice(const HexSystem& hs, const EdgeSet& s) {
  return !find_unhit_frame(hs, s).has_value();
}

bool is_complete_forcing_set_def(const HexSystem& hs, const EdgeSet& s) {
  require_perfect_matching(hs);
  for (const EdgeSet& m : enumerate_perfect_matchings(hs))
    if (!is_forcing_set(hs, m, s & m))
      return false;
  return true;
}

bool is_complete_forcing_set_cata(const HexSystem& hs, const EdgeSet& s) {
  if (!is_catacondensed(hs))
    fail(ErrorKind::NotCatacondensed, "some vertex lies on three hexagons");
  for (int h = 0; h < hs.num_hexagons(); ++h) {
    auto [a, b] = hexagon_frames(hs, h);
    if (!a.intersects(s) || !b.intersects(s))
      return false;
  }
  return true;
}

MinForcingResult min_complete_forcing(const HexSystem& hs, int max_dim) {
  std::vector<EdgeSet> frames;
  for (NiceCycle& c : enumerate_nice_cycles(hs, max_dim)) {
    frames.push_back(std::move(c.frame_a));
    frames.push_back(std::move(c.frame_b));
  }
  HittingSetResult r = minimum_hitting_set(hs.num_edges(), std::move(frames));
  return {static_cast<int>(r.size), std::move(r.witness)};
}

} // namespace hexforce
