#include <doctest.h>

#include <algorithm>
#include <random>

#include <hexforce/bounds.hpp>
#include <hexforce/families.hpp>
#include <hexforce/matchings.hpp>

#include "oracles.hpp"

using namespace hexforce;

namespace {

HexSystem single() { return HexSystem({{0, 0}}); }
HexSystem par(int p, int q) { return generate({Family::Parallelogram, p, q}).hs; }
HexSystem rp32() { return generate({Family::ProlateRect, 3, 2}).hs; }

// Translates centers so the least one sits at the origin.
std::vector<HexCenter> normalized(const HexSystem& hs) {
  std::vector<HexCenter> cs(hs.centers().begin(), hs.centers().end());
  HexCenter o = cs[0];
  for (HexCenter& c : cs)
    c = {c.x - o.x, c.y - o.y};
  return cs;
}

} // namespace

TEST_CASE("fixed edges") {
  FixedEdgeReport r1 = fixed_edges(single());
  CHECK(r1.free == single().all_edges());

  HexSystem n = par(1, 2);
  FixedEdgeReport r2 = fixed_edges(n);
  CHECK(r2.free == n.all_edges());

  HexSystem r = rp32();
  FixedEdgeReport r3 = fixed_edges(r);
  // the bonds joining the two naphthalene halves are fixed single
  CHECK_FALSE(r3.fixed_single.empty());
  CHECK(r3.free.size() < static_cast<std::size_t>(r.num_edges()));
  // compare with membership over all perfect matchings
  auto pms = oracle::perfect_matchings(r);
  for (int e = 0; e < r.num_edges(); ++e) {
    int in = 0;
    for (const EdgeSet& m : pms)
      in += m.contains(e);
    CHECK(r3.fixed_double.contains(e) == (in == static_cast<int>(pms.size())));
    CHECK(r3.fixed_single.contains(e) == (in == 0));
  }
  CHECK((r3.fixed_double | r3.fixed_single | r3.free) == r.all_edges());
  CHECK_FALSE(r3.fixed_double.intersects(r3.fixed_single));
}

TEST_CASE("normality and the face test") {
  CHECK(is_normal(single()));
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      CHECK(is_normal(par(p, q)));
  CHECK_FALSE(is_normal(rp32()));
  std::vector<HexSystem> systems{single(), par(2, 3), rp32(), generate({Family::ProlateRect, 3, 3}).hs,
                                 generate({Family::Hexagon, 2, 0}).hs};
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i)
    systems.push_back(oracle::random_chain(2 + i % 5, rng));
  for (const HexSystem& hs : systems) {
    if (!has_perfect_matching(hs))
      continue;
    CHECK(is_normal(hs) == faces_are_nice(hs));
  }
}

TEST_CASE("normal components") {
  auto c1 = normal_components(single());
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == single());
  auto c2 = normal_components(par(2, 2));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == par(2, 2));

  auto c3 = normal_components(rp32());
  REQUIRE(c3.size() == 2);
  for (const HexSystem& c : c3) {
    CHECK(normalized(c) == normalized(par(1, 2)));
    CHECK(is_normal(c));
  }
}

TEST_CASE("decomposition additivity") {
  CHECK(cf_by_decomposition(rp32()) == 6);
  CHECK(cf_by_decomposition(single()) == 2);
  CHECK(cf_by_decomposition(par(2, 2)) == 5);
  std::vector<HexSystem> systems{rp32(), generate({Family::ProlateRect, 3, 3}).hs,
                                 generate({Family::ProlateRect, 5, 2}).hs};
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40 && systems.size() < 8; ++i) {
    HexSystem hs = oracle::random_chain(3 + i % 6, rng);
    if (has_perfect_matching(hs) && !is_normal(hs))
      systems.push_back(hs);
  }
  for (const HexSystem& hs : systems) {
    REQUIRE(hs.num_hexagons() <= 8);
    CHECK(cf_by_decomposition(hs) == min_complete_forcing(hs).cardinality);
  }
}

TEST_CASE("hexagon-count bound") {
  CHECK(lower_bound_hexagons(single()) == 2);
  CHECK(lower_bound_hexagons(par(1, 2)) == 3);
  CHECK(lower_bound_hexagons(par(2, 2)) == 5);
  CHECK_THROWS_WITH_AS(lower_bound_hexagons(rp32()), doctest::Contains("NotNormal"), Error);
  CHECK_THROWS_WITH_AS(lower_bound_matching(rp32()), doctest::Contains("NotNormal"), Error);
}

TEST_CASE("edge class partition") {
  EdgeClassPartition p1 = edge_class_partition(single());
  CHECK(p1.k() == 2);
  CHECK(edge_class_partition(par(1, 2)).k() == 3);

  HexSystem c3 = par(1, 3);
  EdgeClassPartition p3 = edge_class_partition(c3);
  REQUIRE(p3.k() == 4);
  auto fr = [&](int h) { return hexagon_frames(c3, h); };
  std::vector<EdgeSet> want{fr(0).first | fr(1).second, fr(1).first | fr(2).second, fr(0).second,
                            fr(2).first};
  for (const EdgeSet& w : want)
    CHECK(std::find(p3.classes.begin(), p3.classes.end(), w) != p3.classes.end());
  for (int i = 1; i < p3.k(); ++i)
    CHECK(p3.classes[i - 1].first() < p3.classes[i].first());
}

TEST_CASE("partition sanity on many systems") {
  std::vector<HexSystem> systems;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      systems.push_back(par(p, q));
  for (int p = 1; p <= 4; ++p)
    systems.push_back(generate({Family::Hexagon, p, 0}).hs);
  systems.push_back(rp32());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i)
    systems.push_back(oracle::random_chain(1 + i % 6, rng));
  for (const HexSystem& hs : systems) {
    EdgeClassPartition p = edge_class_partition(hs);
    CHECK(p.k() >= 2);
    EdgeSet all = hs.empty_set();
    for (const EdgeSet& c : p.classes) {
      CHECK_FALSE(all.intersects(c));
      all |= c;
    }
    CHECK(all == hs.all_edges());
    std::size_t total = 0;
    std::vector<int> membership(hs.num_hexagons(), 0);
    for (const auto& hset : p.hexagon_sets) {
      total += hset.size();
      for (int h : hset)
        ++membership[h];
    }
    CHECK(total == 2u * hs.num_hexagons());
    for (int m : membership)
      CHECK(m == 2);
    for (int h = 0; h < hs.num_hexagons(); ++h) {
      auto [a, b] = hexagon_frames(hs, h);
      for (const EdgeSet& c : p.classes)
        CHECK_FALSE((a.is_subset_of(c) && b.is_subset_of(c)));
    }
  }
}

TEST_CASE("dual subgraphs") {
  auto d1 = dual_subgraphs(single(), edge_class_partition(single()));
  REQUIRE(d1.size() == 2);
  for (const auto& d : d1) {
    CHECK(d.graph.num_vertices() == 1);
    CHECK(d.graph.num_edges() == 0);
  }
  auto shape = [](const HexSystem& hs) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& d : dual_subgraphs(hs, edge_class_partition(hs)))
      out.insert({d.graph.num_vertices(), d.graph.num_edges()});
    return out;
  };
  CHECK(shape(par(1, 2)) == std::multiset<std::pair<int, int>>{{2, 1}, {1, 0}, {1, 0}});
  CHECK(shape(par(1, 3)) == std::multiset<std::pair<int, int>>{{2, 1}, {2, 1}, {1, 0}, {1, 0}});

  HexSystem hs = generate({Family::Hexagon, 3, 0}).hs;
  EdgeClassPartition p = edge_class_partition(hs);
  auto ds = dual_subgraphs(hs, p);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    // connected, and every edge crosses an inner edge of its class
    const Graph& g = ds[i].graph;
    std::vector<int> seen(g.num_vertices(), 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& a : g.arcs(v))
        if (!seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == g.num_vertices());
    for (int e : ds[i].crossed) {
      CHECK(p.classes[i].contains(e));
      CHECK_FALSE(hs.is_peripheral(e));
    }
  }
}

TEST_CASE("matching bound") {
  CHECK(lower_bound_matching(single()) == 2);
  CHECK(lower_bound_matching(par(1, 2)) == 3);
  CHECK(lower_bound_matching(par(1, 3)) == 4);
  CHECK(lower_bound_matching(generate({Family::Hexagon, 2, 0}).hs) == 9);
  CHECK(lower_bound_matching(generate({Family::OblateRect, 3, 2}).hs) == 9);
}

TEST_CASE("edge cover number") {
  CHECK(edge_cover_number(Graph::path(2)) == 1);
  CHECK(edge_cover_number(Graph::path(3)) == 2);
  CHECK(edge_cover_number(Graph::cycle(6)) == 3);
  CHECK(oracle::min_edge_cover(Graph::cycle(6)) == 3);
  CHECK_THROWS_WITH_AS(edge_cover_number(Graph(1)), doctest::Contains("IsolatedVertex"), Error);
}

TEST_CASE("bound sandwich and catacondensed equality") {
  std::vector<HexSystem> systems{single(), par(1, 2), par(2, 2), par(2, 3), par(2, 4),
                                 generate({Family::Hexagon, 2, 0}).hs,
                                 generate({Family::OblateRect, 3, 1}).hs,
                                 generate({Family::OblateRect, 3, 2}).hs};
  std::mt19937_64 rng(6);
  for (int i = 0; i < 25; ++i)
    systems.push_back(oracle::random_chain(1 + i % 6, rng));
  for (const HexSystem& hs : systems) {
    if (!has_perfect_matching(hs) || !is_normal(hs))
      continue;
    int cf = min_complete_forcing(hs).cardinality;
    CHECK(lower_bound_hexagons(hs) <= cf);
    CHECK(lower_bound_matching(hs) <= cf);
    if (is_catacondensed(hs))
      CHECK(lower_bound_matching(hs) == cf);
  }
}

TEST_CASE("bounds report") {
  BoundsReport r = bounds_report(generate({Family::Hexagon, 2, 0}).hs);
  CHECK(r.n == 7);
  CHECK(r.normal);
  CHECK(r.k == 3);
  CHECK(*r.hexagon_bound == 8);
  CHECK(*r.matching_bound == 9);
  std::string text = format_report(r);
  CHECK(text.find("lower bound (matching) = 9") != std::string::npos);
  BoundsReport s = bounds_report(rp32());
  CHECK_FALSE(s.normal);
  CHECK_FALSE(s.hexagon_bound.has_value());
}
