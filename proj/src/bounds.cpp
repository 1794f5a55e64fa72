#include <hexforce/bounds.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <hexforce/ecut.hpp>
#include <hexforce/matchings.hpp>

namespace hexforce {

namespace {

void require_perfect_matching(const HexSystem& hs) {
  if (!has_perfect_matching(hs))
    fail(ErrorKind::NoPerfectMatching, "the system has no perfect matching");
}

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }
private:
  std::vector<int> parent_;
};

} // namespace

FixedEdgeReport fixed_edges(const HexSystem& hs) {
  require_perfect_matching(hs);
  FixedEdgeReport rep{hs.empty_set(), hs.empty_set(), hs.empty_set()};
  for (int e = 0; e < hs.num_edges(); ++e) {
    Restriction without_edge;
    without_edge.forbidden = hs.empty_set();
    without_edge.forbidden->insert(e);
    Restriction without_ends;
    without_ends.removed.assign(hs.num_vertices(), 0);
    auto [a, b] = hs.endpoints(e);
    without_ends.removed[a] = without_ends.removed[b] = 1;
    if (!has_perfect_matching(hs, without_edge))
      rep.fixed_double.insert(e);
    else if (!has_perfect_matching(hs, without_ends))
      rep.fixed_single.insert(e);
    else
      rep.free.insert(e);
  }
  return rep;
}

bool is_normal(const HexSystem& hs) {
  FixedEdgeReport rep = fixed_edges(hs);
  return rep.fixed_double.empty() && rep.fixed_single.empty();
}

bool faces_are_nice(const HexSystem& hs) {
  require_perfect_matching(hs);
  for (int h = 0; h < hs.num_hexagons(); ++h) {
    Restriction r;
    r.removed.assign(hs.num_vertices(), 0);
    for (int v : hs.hexagon_vertices(h))
      r.removed[v] = 1;
    if (!has_perfect_matching(hs, r))
      return false;
  }
  return true;
}

std::vector<HexSystem> normal_components(const HexSystem& hs) {
  FixedEdgeReport rep = fixed_edges(hs);
  UnionFind uf(hs.num_vertices());
  rep.free.for_each([&](int e) {
    auto [a, b] = hs.endpoints(e);
    uf.unite(a, b);
  });
  std::map<int, std::vector<HexCenter>> groups;
  for (int h = 0; h < hs.num_hexagons(); ++h) {
    const auto& es = hs.hexagon_edges(h);
    if (std::all_of(es.begin(), es.end(), [&](int e) { return rep.free.contains(e); }))
      groups[uf.find(hs.hexagon_vertices(h)[0])].push_back(hs.center(h));
  }
  std::vector<HexSystem> out;
  for (auto& [root, centers] : groups)
    out.emplace_back(std::move(centers));
  std::sort(out.begin(), out.end(), [](const HexSystem& a, const HexSystem& b) {
    return a.center(0) < b.center(0);
  });
  return out;
}

int cf_by_decomposition(const HexSystem& hs, int max_dim) {
  int total = 0;
  for (const HexSystem& c : normal_components(hs))
    total += min_complete_forcing(c, max_dim).cardinality;
  return total;
}

int lower_bound_hexagons(const HexSystem& hs) {
  if (!is_normal(hs))
    fail(ErrorKind::NotNormal, "the system has fixed edges");
  return hs.num_hexagons() + 1;
}

EdgeClassPartition edge_class_partition(const HexSystem& hs) {
  UnionFind uf(hs.num_edges());
  for (int h = 0; h < hs.num_hexagons(); ++h) {
    auto [a, b] = hexagon_frames(hs, h);
    for (const EdgeSet* f : {&a, &b}) {
      int first = f->first();
      f->for_each([&](int e) { uf.unite(first, e); });
    }
  }
  // union-find keeps the least edge as root, so roots come in class order
  EdgeClassPartition p;
  std::vector<int> index(hs.num_edges(), -1);
  for (int e = 0; e < hs.num_edges(); ++e) {
    int r = uf.find(e);
    if (index[r] < 0) {
      index[r] = p.k();
      p.classes.push_back(hs.empty_set());
      p.hexagon_sets.emplace_back();
    }
    p.classes[index[r]].insert(e);
  }
  for (int h = 0; h < hs.num_hexagons(); ++h) {
    auto [a, b] = hexagon_frames(hs, h);
    int ca = index[uf.find(a.first())], cb = index[uf.find(b.first())];
    p.hexagon_sets[ca].push_back(h);
    if (cb != ca)
      p.hexagon_sets[cb].push_back(h);
  }
  for (auto& hs_i : p.hexagon_sets)
    std::sort(hs_i.begin(), hs_i.end());
  return p;
}

std::vector<DualSubgraph> dual_subgraphs(const HexSystem& hs, const EdgeClassPartition& p) {
  std::vector<DualSubgraph> out;
  for (int i = 0; i < p.k(); ++i) {
    DualSubgraph d;
    d.hexagons = p.hexagon_sets[i];
    d.graph = Graph(static_cast<int>(d.hexagons.size()));
    std::vector<int> local(hs.num_hexagons(), -1);
    for (std::size_t j = 0; j < d.hexagons.size(); ++j)
      local[d.hexagons[j]] = static_cast<int>(j);
    p.classes[i].for_each([&](int e) {
      auto [a, b] = hs.edge_hexagons(e);
      if (b < 0)
        return;
      if (local[a] < 0 || local[b] < 0)
        fail(ErrorKind::Internal, "class edge joins a hexagon outside the class");
      d.graph.add_edge(local[a], local[b]);
      d.crossed.push_back(e);
    });
    out.push_back(std::move(d));
  }
  return out;
}

int lower_bound_matching(const HexSystem& hs) {
  if (!is_normal(hs))
    fail(ErrorKind::NotNormal, "the system has fixed edges");
  int total = 0;
  for (const DualSubgraph& d : dual_subgraphs(hs, edge_class_partition(hs)))
    total += static_cast<int>(max_matching(d.graph).size());
  return 2 * hs.num_hexagons() - total;
}

int edge_cover_number(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0)
      fail(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
  return g.num_vertices() - static_cast<int>(max_matching(g).size());
}

BoundsReport bounds_report(const HexSystem& hs) {
  BoundsReport r;
  r.n = hs.num_hexagons();
  r.normal = is_normal(hs);
  EdgeClassPartition p = edge_class_partition(hs);
  r.k = p.k();
  int nu = 0;
  for (const DualSubgraph& d : dual_subgraphs(hs, p)) {
    r.class_hexagons.push_back(static_cast<int>(d.hexagons.size()));
    r.class_matching.push_back(static_cast<int>(max_matching(d.graph).size()));
    nu += r.class_matching.back();
  }
  if (r.normal) {
    r.hexagon_bound = r.n + 1;
    r.matching_bound = 2 * r.n - nu;
  }
  auto [dir, cls] = parallel_class_bound(hs);
  r.parallel_direction = dir;
  r.parallel_bound = static_cast<int>(cls.size());
  return r;
}

std::string format_report(const BoundsReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << "\n";
  out << "normal = " << (r.normal ? "yes" : "no") << "\n";
  out << "k = " << r.k << "\n";
  for (int i = 0; i < r.k; ++i)
    out << "class " << i + 1 << ": hexagons = " << r.class_hexagons[i]
        << ", nu = " << r.class_matching[i] << "\n";
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  out << "lower bound (hexagons) = " << opt(r.hexagon_bound) << "\n";
  out << "lower bound (matching) = " << opt(r.matching_bound) << "\n";
  out << "upper bound (parallel " << to_string(r.parallel_direction) << ") = " << r.parallel_bound
      << "\n";
  return out.str();
}

} // namespace hexforce
