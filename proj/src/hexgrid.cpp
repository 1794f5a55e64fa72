#include <hexforce/hexgrid.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace hexforce {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string to_text(HexCenter c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

} // namespace

bool satisfies_lattice(HexCenter c) {
  return mod(c.y, 3) == 0 && mod(c.x, 2) == mod(c.y / 3, 2);
}

Color Vertex::color() const { return mod(y, 3) == 1 ? Color::Black : Color::White; }

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Vert: return "VERT";
    case Direction::Pos: return "POS";
    case Direction::Neg: return "NEG";
  }
  return "?";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::L: return "L";
    case Role::TL: return "TL";
    case Role::TR: return "TR";
    case Role::R: return "R";
    case Role::BR: return "BR";
    case Role::BL: return "BL";
  }
  return "?";
}

EdgeRef::EdgeRef(Vertex a, Vertex b) : u(a), v(b) {
  if (v < u)
    std::swap(u, v);
}

Direction EdgeRef::direction() const {
  int dy = v.y - u.y;
  if (v.x == u.x)
    return Direction::Vert;
  return dy > 0 ? Direction::Pos : Direction::Neg;
}

std::array<Vertex, 6> hexagon_corners(HexCenter c) {
  return {Vertex{c.x, c.y + 2}, Vertex{c.x - 1, c.y + 1}, Vertex{c.x - 1, c.y - 1},
          Vertex{c.x, c.y - 2}, Vertex{c.x + 1, c.y - 1}, Vertex{c.x + 1, c.y + 1}};
}

EdgeRef role_edge(HexCenter c, Role role) {
  Vertex t{c.x, c.y + 2}, tl{c.x - 1, c.y + 1}, bl{c.x - 1, c.y - 1};
  Vertex b{c.x, c.y - 2}, br{c.x + 1, c.y - 1}, tr{c.x + 1, c.y + 1};
  switch (role) {
    case Role::L: return EdgeRef(tl, bl);
    case Role::TL: return EdgeRef(t, tl);
    case Role::TR: return EdgeRef(t, tr);
    case Role::R: return EdgeRef(tr, br);
    case Role::BR: return EdgeRef(b, br);
    case Role::BL: return EdgeRef(b, bl);
  }
  fail(ErrorKind::Internal, "bad role");
}

HexSystem::HexSystem(std::vector<HexCenter> centers) : centers_(std::move(centers)) {
  if (centers_.empty())
    fail(ErrorKind::Empty, "no hexagons");
  std::sort(centers_.begin(), centers_.end());
  centers_.erase(std::unique(centers_.begin(), centers_.end()), centers_.end());
  for (const HexCenter& c : centers_)
    if (!satisfies_lattice(c))
      fail(ErrorKind::ParityViolation, "center " + to_text(c) + " is not on the lattice");

  for (const HexCenter& c : centers_) {
    for (const Vertex& v : hexagon_corners(c))
      vertices_.push_back(v);
    for (Role r : kRoles)
      edges_.push_back(role_edge(c, r));
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  ends_.resize(edges_.size());
  incident_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    int a = *vertex_index(edges_[e].u);
    int b = *vertex_index(edges_[e].v);
    ends_[e] = {a, b};
    incident_[a].push_back(static_cast<int>(e));
    incident_[b].push_back(static_cast<int>(e));
  }

  edge_hexes_.assign(edges_.size(), {-1, -1});
  hex_edges_.resize(centers_.size());
  hex_vertices_.resize(centers_.size());
  for (std::size_t h = 0; h < centers_.size(); ++h) {
    auto corners = hexagon_corners(centers_[h]);
    for (int i = 0; i < 6; ++i)
      hex_vertices_[h][i] = *vertex_index(corners[i]);
    for (Role r : kRoles) {
      int e = *edge_index(role_edge(centers_[h], r));
      hex_edges_[h][static_cast<int>(r)] = e;
      auto& slot = edge_hexes_[e];
      if (slot[0] < 0)
        slot[0] = static_cast<int>(h);
      else
        slot[1] = static_cast<int>(h);
    }
  }
  for (auto& slot : edge_hexes_)
    if (slot[1] >= 0 && slot[1] < slot[0])
      std::swap(slot[0], slot[1]);

  // hexagon adjacency must be connected
  std::vector<char> seen(centers_.size(), 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!todo.empty()) {
    int h = todo.front();
    todo.pop();
    for (int e : hex_edges_[h]) {
      for (int g : edge_hexes_[e])
        if (g >= 0 && !seen[g]) {
          seen[g] = 1;
          ++reached;
          todo.push(g);
        }
    }
  }
  if (reached != num_hexagons())
    fail(ErrorKind::Disconnected, "hexagon adjacency graph is not connected");

  // Euler: V - E + F = 2 with F = hexagons + exterior; any hole adds a face.
  if (num_vertices() - num_edges() + num_hexagons() != 1)
    fail(ErrorKind::NotSimplyConnected, "hexagon set encloses a hole");
}

std::optional<int> HexSystem::hexagon_index(HexCenter c) const {
  auto it = std::lower_bound(centers_.begin(), centers_.end(), c);
  if (it == centers_.end() || *it != c)
    return std::nullopt;
  return static_cast<int>(it - centers_.begin());
}

std::optional<int> HexSystem::vertex_index(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> HexSystem::edge_index(const EdgeRef& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

EdgeSet HexSystem::all_edges() const {
  EdgeSet s(edges_.size());
  for (int e = 0; e < num_edges(); ++e)
    s.insert(e);
  return s;
}

EdgeSet HexSystem::hexagon_boundary(int h) const {
  EdgeSet s(edges_.size());
  for (int e : hex_edges_[h])
    s.insert(e);
  return s;
}

HexSystem build_hexsystem(std::vector<HexCenter> centers) {
  return HexSystem(std::move(centers));
}

EdgeRef hexagon_edge(const HexSystem& hs, HexCenter h, Role role) {
  auto idx = hs.hexagon_index(h);
  if (!idx)
    fail(ErrorKind::UnknownHexagon, "no hexagon at " + to_text(h));
  return hs.edge(hs.hexagon_edge(*idx, role));
}

std::pair<EdgeSet, EdgeSet> hexagon_frames(const HexSystem& hs, int h) {
  EdgeSet a = hs.empty_set(), b = hs.empty_set();
  for (Role r : {Role::TL, Role::BL, Role::R})
    a.insert(hs.hexagon_edge(h, r));
  for (Role r : {Role::L, Role::BR, Role::TR})
    b.insert(hs.hexagon_edge(h, r));
  return {a, b};
}

std::pair<EdgeSet, EdgeSet> hexagon_frames(const HexSystem& hs, HexCenter h) {
  auto idx = hs.hexagon_index(h);
  if (!idx)
    fail(ErrorKind::UnknownHexagon, "no hexagon at " + to_text(h));
  return hexagon_frames(hs, *idx);
}

EdgeSet direction_class(const HexSystem& hs, Direction d) {
  EdgeSet s = hs.empty_set();
  for (int e = 0; e < hs.num_edges(); ++e)
    if (hs.direction(e) == d)
      s.insert(e);
  return s;
}

bool is_catacondensed(const HexSystem& hs) {
  std::vector<int> count(hs.num_vertices(), 0);
  for (int h = 0; h < hs.num_hexagons(); ++h)
    for (int v : hs.hexagon_vertices(h))
      if (++count[v] == 3)
        return false;
  return true;
}

DualGraph::DualGraph(const HexSystem& hs) : n_(hs.num_hexagons()) {
  edges_.reserve(hs.num_edges());
  for (int e = 0; e < hs.num_edges(); ++e) {
    const auto& hx = hs.edge_hexagons(e);
    edges_.push_back({hx[0], hx[1] < 0 ? n_ : hx[1], e});
  }
}

int DualGraph::degree(int x) const {
  int d = 0;
  for (const DualEdge& de : edges_)
    d += (de.a == x) + (de.b == x);
  return d;
}

BoundaryCycle peripheral_cycle(const HexSystem& hs) {
  BoundaryCycle cyc;
  int start = -1;
  for (int e = 0; e < hs.num_edges() && start < 0; ++e)
    if (hs.is_peripheral(e))
      start = hs.endpoints(e).first;
  // The smallest vertex of the system is always on the boundary, and the
  // smallest peripheral endpoint found above is that vertex.
  auto peripheral_at = [&](int v) {
    std::vector<int> out;
    for (int e : hs.incident_edges(v))
      if (hs.is_peripheral(e))
        out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  };
  int v = start;
  int prev_edge = -1;
  do {
    auto pe = peripheral_at(v);
    if (pe.size() != 2)
      fail(ErrorKind::Internal, "boundary vertex without two peripheral edges");
    int e = pe[0] == prev_edge ? pe[1] : pe[0];
    cyc.vertices.push_back(v);
    cyc.edges.push_back(e);
    v = hs.other_end(e, v);
    prev_edge = e;
  } while (v != start);
  return cyc;
}

// ---- text formats -------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view s) {
  auto p = s.find('#');
  return p == std::string_view::npos ? s : s.substr(0, p);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size())
        lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

// Parses exactly `n` whitespace separated integers.
bool parse_ints(std::string_view s, int* out, int n) {
  int got = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
      ++i;
    if (i == s.size())
      break;
    if (got == n)
      return false;
    auto r = std::from_chars(s.data() + i, s.data() + s.size(), out[got]);
    if (r.ec != std::errc())
      return false;
    i = static_cast<std::size_t>(r.ptr - s.data());
    if (i < s.size() && s[i] != ' ' && s[i] != '\t')
      return false;
    ++got;
  }
  return got == n;
}

std::string line_ref(std::size_t lineno) { return "line " + std::to_string(lineno + 1); }

} // namespace

std::string serialize(const HexSystem& hs) {
  std::string out = "HEXSYS 1\n";
  for (const HexCenter& c : hs.centers())
    out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

HexSystem parse_hexsys(std::string_view text) {
  auto lines = split_lines(text);
  bool header = false;
  std::vector<HexCenter> centers;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto s = trim(strip_comment(lines[i]));
    if (s.empty())
      continue;
    if (!header) {
      int version = 0;
      if (s.substr(0, 6) != "HEXSYS" || s.size() < 7 || (s[6] != ' ' && s[6] != '\t') ||
          !parse_ints(s.substr(6), &version, 1) || version != 1)
        fail(ErrorKind::SyntaxError, line_ref(i) + ": expected header \"HEXSYS 1\"");
      header = true;
      continue;
    }
    int xy[2];
    if (!parse_ints(s, xy, 2))
      fail(ErrorKind::SyntaxError, line_ref(i) + ": expected \"cx cy\"");
    centers.push_back({xy[0], xy[1]});
  }
  if (!header)
    fail(ErrorKind::SyntaxError, "missing header \"HEXSYS 1\"");
  auto sorted = centers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::SyntaxError, "duplicate hexagon center");
  return HexSystem(std::move(centers));
}

std::string format_edge_set(const HexSystem& hs, const EdgeSet& s) {
  std::string out;
  s.for_each([&](int e) {
    const EdgeRef& r = hs.edge(e);
    out += std::to_string(r.u.x) + " " + std::to_string(r.u.y) + " " +
           std::to_string(r.v.x) + " " + std::to_string(r.v.y) + "\n";
  });
  return out;
}

namespace {

void parse_edge_line(const HexSystem& hs, std::string_view s, std::size_t lineno, EdgeSet& into) {
  int c[4];
  if (!parse_ints(s, c, 4))
    fail(ErrorKind::SyntaxError, line_ref(lineno) + ": expected \"x1 y1 x2 y2\"");
  auto idx = hs.edge_index(EdgeRef(Vertex{c[0], c[1]}, Vertex{c[2], c[3]}));
  if (!idx)
    fail(ErrorKind::UnknownEdge, line_ref(lineno) + ": not an edge of the system");
  into.insert(*idx);
}

} // namespace

EdgeSet parse_edge_set(const HexSystem& hs, std::string_view text) {
  EdgeSet s = hs.empty_set();
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(strip_comment(lines[i]));
    if (!line.empty())
      parse_edge_line(hs, line, i, s);
  }
  return s;
}

std::string format_cut_list(const HexSystem& hs, const std::vector<EdgeSet>& cuts) {
  std::string out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i)
      out += "\n";
    out += format_edge_set(hs, cuts[i]);
  }
  return out;
}

std::vector<EdgeSet> parse_cut_list(const HexSystem& hs, std::string_view text) {
  std::vector<EdgeSet> cuts;
  bool open = false;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) {
      open = false;
      continue;
    }
    auto line = trim(strip_comment(lines[i]));
    if (line.empty())
      continue;
    if (!open) {
      cuts.push_back(hs.empty_set());
      open = true;
    }
    parse_edge_line(hs, line, i, cuts.back());
  }
  return cuts;
}

} // namespace hexforce
