#include <doctest.h>

#include <hexforce/families.hpp>
#include <hexforce/hexgrid.hpp>

using namespace hexforce;

namespace {

HexSystem single() { return HexSystem({{0, 0}}); }
HexSystem naphthalene() { return HexSystem({{0, 0}, {2, 0}}); }
HexSystem p22() { return generate({Family::Parallelogram, 2, 2}).hs; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

} // namespace

TEST_CASE("building systems from centers") {
  HexSystem h = single();
  CHECK(h.num_vertices() == 6);
  CHECK(h.num_edges() == 6);

  HexSystem n = naphthalene();
  CHECK(n.num_vertices() == 10);
  CHECK(n.num_edges() == 11);

  CHECK(kind_of([] { HexSystem({{1, 0}}); }) == ErrorKind::ParityViolation);
  CHECK(kind_of([] { HexSystem({{0, 1}}); }) == ErrorKind::ParityViolation);
  CHECK(kind_of([] { HexSystem({}); }) == ErrorKind::Empty);
  CHECK(kind_of([] { HexSystem({{0, 0}, {6, 0}}); }) == ErrorKind::Disconnected);
  // six hexagons around an empty one
  CHECK(kind_of([] {
          HexSystem({{2, 0}, {-2, 0}, {1, 3}, {-1, 3}, {1, -3}, {-1, -3}});
        }) == ErrorKind::NotSimplyConnected);
}

TEST_CASE("role edges of the hexagon at the origin") {
  HexSystem h = single();
  EdgeRef l = hexagon_edge(h, {0, 0}, Role::L);
  CHECK(l.u == Vertex{-1, -1});
  CHECK(l.v == Vertex{-1, 1});
  EdgeRef tr = hexagon_edge(h, {0, 0}, Role::TR);
  CHECK(tr.u == Vertex{0, 2});
  CHECK(tr.v == Vertex{1, 1});
  CHECK(kind_of([&] { hexagon_edge(h, {2, 0}, Role::L); }) == ErrorKind::UnknownHexagon);
}

TEST_CASE("frames of a hexagon") {
  HexSystem h = single();
  auto [f1, f2] = hexagon_frames(h, HexCenter{0, 0});
  CHECK(f1.size() == 3);
  CHECK(f2.size() == 3);
  CHECK_FALSE(f1.intersects(f2));
  CHECK((f1 | f2) == h.all_edges());
  CHECK(f1.contains(h.hexagon_edge(0, Role::R)));
  for (const EdgeSet* f : {&f1, &f2}) {
    std::vector<int> deg(6, 0);
    f->for_each([&](int e) {
      ++deg[h.endpoints(e).first];
      ++deg[h.endpoints(e).second];
    });
    for (int d : deg)
      CHECK(d == 1);
  }
}

TEST_CASE("dual graph") {
  DualGraph d1(single());
  CHECK(d1.num_vertices() == 2);
  CHECK(d1.edges().size() == 6);
  for (const DualEdge& e : d1.edges())
    CHECK(e.b == d1.exterior());

  DualGraph d2(naphthalene());
  int inner = 0;
  for (const DualEdge& e : d2.edges())
    inner += e.b != d2.exterior();
  CHECK(d2.num_vertices() == 3);
  CHECK(inner == 1);
  CHECK(d2.edges().size() - inner == 10);

  HexSystem p = p22();
  DualGraph d3(p);
  inner = 0;
  for (const DualEdge& e : d3.edges())
    inner += e.b != d3.exterior();
  // one shared edge per pair of centers at a neighbor offset
  int pairs = 0;
  for (HexCenter a : p.centers())
    for (HexCenter b : p.centers()) {
      int dx = b.x - a.x, dy = b.y - a.y;
      pairs += (dy == 0 && dx == 2) || (dy == 3 && (dx == 1 || dx == -1));
    }
  CHECK(d3.num_vertices() == 5);
  CHECK(pairs == 5);
  CHECK(inner == pairs);
  for (int h = 0; h < p.num_hexagons(); ++h)
    CHECK(d3.degree(h) == 6);
}

TEST_CASE("peripheral cycle") {
  CHECK(peripheral_cycle(single()).edges.size() == 6);
  BoundaryCycle b = peripheral_cycle(naphthalene());
  CHECK(b.edges.size() == 10);
  HexSystem p = p22();
  BoundaryCycle c = peripheral_cycle(p);
  CHECK(c.edges.size() == 14);
  int peripheral = 0;
  for (int e = 0; e < p.num_edges(); ++e)
    peripheral += p.is_peripheral(e);
  CHECK(peripheral == 14);
  // consecutive edges share the listed vertex
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    auto [a, bb] = p.endpoints(c.edges[i]);
    int u = c.vertices[i], w = c.vertices[(i + 1) % c.vertices.size()];
    CHECK(((a == u && bb == w) || (a == w && bb == u)));
  }
}

TEST_CASE("lattice invariants on generated systems") {
  for (FamilySpec s : {FamilySpec{Family::Parallelogram, 3, 4}, FamilySpec{Family::Hexagon, 3, 0},
                       FamilySpec{Family::OblateRect, 5, 3}, FamilySpec{Family::ProlateRect, 3, 4}}) {
    HexSystem hs = generate(s).hs;
    CAPTURE(to_string(s));
    for (int e = 0; e < hs.num_edges(); ++e) {
      auto [a, b] = hs.endpoints(e);
      CHECK(hs.color(a) != hs.color(b));
      const EdgeRef& r = hs.edge(e);
      int dx = r.v.x - r.u.x, dy = r.v.y - r.u.y;
      Direction d = dx == 0 ? Direction::Vert : dy > 0 ? Direction::Pos : Direction::Neg;
      CHECK(hs.direction(e) == d);
    }
    EdgeSet all = hs.empty_set();
    for (Direction d : {Direction::Vert, Direction::Pos, Direction::Neg}) {
      EdgeSet c = direction_class(hs, d);
      CHECK_FALSE(all.intersects(c));
      all |= c;
      for (int h = 0; h < hs.num_hexagons(); ++h)
        CHECK((c & hs.hexagon_boundary(h)).size() == 2);
    }
    CHECK(all == hs.all_edges());
    // a shared edge plays opposite roles in its two hexagons
    for (int e = 0; e < hs.num_edges(); ++e) {
      auto [h1, h2] = hs.edge_hexagons(e);
      if (h2 < 0)
        continue;
      auto role_in = [&](int h) {
        for (Role r : kRoles)
          if (hs.hexagon_edge(h, r) == e)
            return r;
        return Role::L;
      };
      Role r1 = role_in(h1), r2 = role_in(h2);
      auto opposite = [](Role a, Role b) {
        return (a == Role::L && b == Role::R) || (a == Role::TL && b == Role::BR) ||
               (a == Role::TR && b == Role::BL);
      };
      CHECK((opposite(r1, r2) || opposite(r2, r1)));
    }
    DualGraph dual(hs);
    CHECK(dual.edges().size() == static_cast<std::size_t>(hs.num_edges()));
  }
}

TEST_CASE("HEXSYS text round trip") {
  HexSystem h = parse_hexsys("HEXSYS 1\n0 0\n");
  CHECK(h == single());
  HexSystem p = p22();
  CHECK(parse_hexsys(serialize(p)) == p);
  CHECK(parse_hexsys("HEXSYS 1\n# comment\n2 0   # east\n0 0\n") == naphthalene());
  CHECK(kind_of([] { parse_hexsys("HEXSYS 1\n1 0\n"); }) == ErrorKind::ParityViolation);
  CHECK(kind_of([] { parse_hexsys("HEXSYS 2\n0 0\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_hexsys("HEXSYS 1\n0 0\n0 0\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_hexsys("HEXSYS 1\n0 x\n"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("edge set and cut list text") {
  HexSystem p = p22();
  EdgeSet s = p.empty_set();
  s.insert(0);
  s.insert(5);
  s.insert(p.num_edges() - 1);
  CHECK(parse_edge_set(p, format_edge_set(p, s)) == s);
  // either vertex order is accepted
  const EdgeRef& e = p.edge(0);
  std::string flipped = std::to_string(e.v.x) + " " + std::to_string(e.v.y) + " " +
                        std::to_string(e.u.x) + " " + std::to_string(e.u.y) + "\n";
  CHECK(parse_edge_set(p, flipped).contains(0));
  CHECK(kind_of([&] { parse_edge_set(p, "100 100 101 101\n"); }) == ErrorKind::UnknownEdge);

  std::vector<EdgeSet> cuts{s, p.hexagon_boundary(0)};
  CHECK(parse_cut_list(p, format_cut_list(p, cuts)) == cuts);
}

TEST_CASE("catacondensed detection") {
  CHECK(is_catacondensed(single()));
  CHECK(is_catacondensed(naphthalene()));
  CHECK_FALSE(is_catacondensed(p22()));
}
