#include <hexforce/matchings.hpp>

#include <algorithm>
#include <functional>
#include <queue>

namespace hexforce {

// ---- general graphs: Edmonds' blossom algorithm ------------------------

namespace {

class Blossom {
public:
  explicit Blossom(const Graph& g)
    : g_(g), n_(g.num_vertices()), match_(n_, -1), parent_(n_), base_(n_),
      used_(n_), in_blossom_(n_), lca_mark_(n_) {}

  std::vector<int> solve() {
    // greedy start
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0)
        for (const auto& a : g_.arcs(v))
          if (match_[a.to] < 0) {
            match_[v] = a.to;
            match_[a.to] = v;
            break;
          }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0)
        continue;
      int u = find_path(v);
      while (u >= 0) {
        int pv = parent_[u];
        int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

private:
  int lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    while (true) {
      a = base_[a];
      lca_mark_[a] = 1;
      if (match_[a] < 0)
        break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b])
        return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i)
      base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& arc : g_.arcs(v)) {
        int to = arc.to;
        if (base_[v] == base_[to] || match_[v] == to)
          continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0)
            return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_, lca_mark_;
};

} // namespace

Matching max_matching(const Graph& g) {
  std::vector<int> mate = Blossom(g).solve();
  Matching m;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] <= v)
      continue;
    // first edge joining the pair; parallel edges are interchangeable
    for (const auto& a : g.arcs(v))
      if (a.to == mate[v]) {
        m.push_back(a.edge);
        break;
      }
  }
  std::sort(m.begin(), m.end());
  return m;
}

bool has_perfect_matching(const Graph& g) {
  return 2 * static_cast<int>(max_matching(g).size()) == g.num_vertices();
}

Graph to_graph(const HexSystem& hs) {
  Graph g(hs.num_vertices());
  for (int e = 0; e < hs.num_edges(); ++e) {
    auto [a, b] = hs.endpoints(e);
    g.add_edge(a, b);
  }
  return g;
}

// ---- hexagonal systems: bipartite routines ------------------------------

namespace {

// Kuhn's augmenting paths from black vertices.
class Kuhn {
public:
  Kuhn(const HexSystem& hs, const Restriction& r)
    : hs_(hs), r_(r), mate_(hs.num_vertices(), -1), via_(hs.num_vertices(), -1),
      seen_(hs.num_vertices(), 0) {}

  bool run() {
    int blacks = 0, whites = 0;
    for (int v = 0; v < hs_.num_vertices(); ++v) {
      if (r_.vertex_removed(v))
        continue;
      (hs_.color(v) == Color::Black ? blacks : whites)++;
    }
    if (blacks != whites)
      return false;
    for (int v = 0; v < hs_.num_vertices(); ++v) {
      if (r_.vertex_removed(v) || hs_.color(v) != Color::Black || mate_[v] >= 0)
        continue;
      for (int e : hs_.incident_edges(v)) {
        int w = hs_.other_end(e, v);
        if (!r_.edge_blocked(e) && !r_.vertex_removed(w) && mate_[w] < 0) {
          link(v, w, e);
          break;
        }
      }
    }
    ++stamp_;
    for (int v = 0; v < hs_.num_vertices(); ++v) {
      if (r_.vertex_removed(v) || hs_.color(v) != Color::Black || mate_[v] >= 0)
        continue;
      ++stamp_;
      if (!augment(v))
        return false;
    }
    return true;
  }

  EdgeSet matching() const {
    EdgeSet m = hs_.empty_set();
    for (int v = 0; v < hs_.num_vertices(); ++v)
      if (mate_[v] >= 0 && hs_.color(v) == Color::Black)
        m.insert(via_[v]);
    return m;
  }

private:
  void link(int b, int w, int e) {
    mate_[b] = w;
    mate_[w] = b;
    via_[b] = via_[w] = e;
  }

  bool augment(int b) {
    for (int e : hs_.incident_edges(b)) {
      int w = hs_.other_end(e, b);
      if (r_.edge_blocked(e) || r_.vertex_removed(w) || seen_[w] == stamp_)
        continue;
      seen_[w] = stamp_;
      if (mate_[w] < 0 || augment(mate_[w])) {
        link(b, w, e);
        return true;
      }
    }
    return false;
  }

  const HexSystem& hs_;
  const Restriction& r_;
  std::vector<int> mate_, via_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

// Backtracking over the lowest uncovered vertex.  The visitor returns false
// to stop the search.
class Enumerator {
public:
  Enumerator(const HexSystem& hs, const Restriction& r)
    : hs_(hs), r_(r), covered_(hs.num_vertices(), 0), current_(hs.empty_set()) {
    for (int v = 0; v < hs.num_vertices(); ++v)
      if (r.vertex_removed(v))
        covered_[v] = 1;
  }

  void run(const std::function<bool(const EdgeSet&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    for (int v = 0; v < hs_.num_vertices(); ++v)
      if (!covered_[v] && !has_free_neighbor(v))
        return;
    recurse(0);
  }

private:
  bool has_free_neighbor(int v) const {
    for (int e : hs_.incident_edges(v))
      if (!r_.edge_blocked(e) && !covered_[hs_.other_end(e, v)])
        return true;
    return false;
  }

  // Every uncovered neighbor of v must still have somewhere to go.
  bool neighbors_alive(int v) const {
    for (int e : hs_.incident_edges(v)) {
      int w = hs_.other_end(e, v);
      if (!covered_[w] && !has_free_neighbor(w))
        return false;
    }
    return true;
  }

  void recurse(int from) {
    int u = from;
    while (u < hs_.num_vertices() && covered_[u])
      ++u;
    if (u == hs_.num_vertices()) {
      if (!(*visit_)(current_))
        stop_ = true;
      return;
    }
    for (int e : hs_.incident_edges(u)) {
      int w = hs_.other_end(e, u);
      if (r_.edge_blocked(e) || covered_[w])
        continue;
      covered_[u] = covered_[w] = 1;
      current_.insert(e);
      if (neighbors_alive(u) && neighbors_alive(w))
        recurse(u + 1);
      current_.erase(e);
      covered_[u] = covered_[w] = 0;
      if (stop_)
        return;
    }
  }

  const HexSystem& hs_;
  const Restriction& r_;
  std::vector<char> covered_;
  EdgeSet current_;
  const std::function<bool(const EdgeSet&)>* visit_ = nullptr;
  bool stop_ = false;
};

} // namespace

std::optional<EdgeSet> find_perfect_matching(const HexSystem& hs, const Restriction& r) {
  Kuhn k(hs, r);
  if (!k.run())
    return std::nullopt;
  return k.matching();
}

bool has_perfect_matching(const HexSystem& hs, const Restriction& r) {
  return Kuhn(hs, r).run();
}

std::size_t count_perfect_matchings(const HexSystem& hs, const Restriction& r,
                                    std::size_t limit) {
  std::size_t count = 0;
  if (limit == 0)
    return 0;
  Enumerator(hs, r).run([&](const EdgeSet&) { return ++count < limit; });
  return count;
}

std::vector<EdgeSet> enumerate_perfect_matchings(const HexSystem& hs, std::size_t limit) {
  std::vector<EdgeSet> out;
  Restriction none;
  Enumerator(hs, none).run([&](const EdgeSet& m) {
    if (out.size() == limit)
      fail(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " perfect matchings");
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_matching(const HexSystem& hs, const EdgeSet& m) {
  std::vector<int> deg(hs.num_vertices(), 0);
  m.for_each([&](int e) {
    auto [a, b] = hs.endpoints(e);
    ++deg[a];
    ++deg[b];
  });
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

bool is_forcing_set(const HexSystem& hs, const EdgeSet& m, const EdgeSet& f) {
  if (!is_perfect_matching(hs, m))
    fail(ErrorKind::NotAMatching, "m is not a perfect matching");
  if (!f.is_subset_of(m))
    fail(ErrorKind::NotASubset, "f is not contained in m");
  Restriction r;
  r.removed.assign(hs.num_vertices(), 0);
  f.for_each([&](int e) {
    auto [a, b] = hs.endpoints(e);
    r.removed[a] = r.removed[b] = 1;
  });
  return count_perfect_matchings(hs, r, 2) == 1;
}

} // namespace hexforce
