// Hexagonal systems on a fixed integer lattice.
//
// A hexagon with center (cx, cy) has cy % 3 == 0 and cx ≡ cy/3 (mod 2).
// Its six corners are
//
//            T (cx, cy+2)
//   TL (cx-1, cy+1)    TR (cx+1, cy+1)
//   BL (cx-1, cy-1)    BR (cx+1, cy-1)
//            B (cx, cy-2)
//
// so every vertex has y % 3 in {1, 2}; y % 3 == 1 is black, 2 is white.
// Edges are identified by their lexicographically ordered endpoint pair and
// indexed in that order, which makes every set output deterministic.

#ifndef HEXFORCE_HEXGRID_HPP_
#define HEXFORCE_HEXGRID_HPP_

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"

namespace hexforce {

struct HexCenter {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const HexCenter&, const HexCenter&) = default;
};

bool satisfies_lattice(HexCenter c);

enum class Color { Black, White };

struct Vertex {
  int x = 0;
  int y = 0;
  Color color() const;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class Direction { Vert, Pos, Neg };
std::string_view to_string(Direction d);

// Roles of the six edges of a hexagon, in the order left vertical, top
// left, top right, right vertical, bottom right, bottom left.
enum class Role { L, TL, TR, R, BR, BL };
inline constexpr std::array<Role, 6> kRoles = {Role::L, Role::TL, Role::TR,
                                                Role::R, Role::BR, Role::BL};
std::string_view to_string(Role r);

struct EdgeRef {
  Vertex u;  // u < v
  Vertex v;
  EdgeRef() = default;
  EdgeRef(Vertex a, Vertex b);  // orders the endpoints
  Direction direction() const;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// The edge playing `role` in the hexagon centered at `c`.
EdgeRef role_edge(HexCenter c, Role role);
std::array<Vertex, 6> hexagon_corners(HexCenter c);  // T, TL, BL, B, BR, TR

class HexSystem {
public:
  // Throws Empty, ParityViolation, Disconnected or NotSimplyConnected.
  explicit HexSystem(std::vector<HexCenter> centers);

  int num_hexagons() const { return static_cast<int>(centers_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const HexCenter> centers() const { return centers_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const EdgeRef> edges() const { return edges_; }

  const HexCenter& center(int h) const { return centers_[h]; }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const EdgeRef& edge(int e) const { return edges_[e]; }

  std::optional<int> hexagon_index(HexCenter c) const;
  std::optional<int> vertex_index(Vertex v) const;
  std::optional<int> edge_index(const EdgeRef& e) const;

  // Endpoint vertex indices, first < second.
  std::pair<int, int> endpoints(int e) const { return ends_[e]; }
  int other_end(int e, int v) const {
    return ends_[e].first == v ? ends_[e].second : ends_[e].first;
  }
  std::span<const int> incident_edges(int v) const { return incident_[v]; }
  Color color(int v) const { return vertices_[v].color(); }
  Direction direction(int e) const { return edges_[e].direction(); }

  int hexagon_edge(int h, Role r) const { return hex_edges_[h][static_cast<int>(r)]; }
  const std::array<int, 6>& hexagon_edges(int h) const { return hex_edges_[h]; }
  const std::array<int, 6>& hexagon_vertices(int h) const { return hex_vertices_[h]; }

  // One or two hexagon indices; -1 pads the second slot of peripheral edges.
  const std::array<int, 2>& edge_hexagons(int e) const { return edge_hexes_[e]; }
  bool is_peripheral(int e) const { return edge_hexes_[e][1] < 0; }

  EdgeSet empty_set() const { return EdgeSet(edges_.size()); }
  EdgeSet all_edges() const;
  EdgeSet hexagon_boundary(int h) const;

  // Two systems are equal when their center sets are.
  friend bool operator==(const HexSystem& a, const HexSystem& b) {
    return a.centers_ == b.centers_;
  }

private:
  std::vector<HexCenter> centers_;
  std::vector<Vertex> vertices_;
  std::vector<EdgeRef> edges_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::array<int, 6>> hex_edges_;
  std::vector<std::array<int, 6>> hex_vertices_;
  std::vector<std::array<int, 2>> edge_hexes_;
};

HexSystem build_hexsystem(std::vector<HexCenter> centers);

// Throws UnknownHexagon when h is not a hexagon of hs.
EdgeRef hexagon_edge(const HexSystem& hs, HexCenter h, Role role);

// First frame holds {TL, BL, R}, second {L, BR, TR}.
std::pair<EdgeSet, EdgeSet> hexagon_frames(const HexSystem& hs, int h);
std::pair<EdgeSet, EdgeSet> hexagon_frames(const HexSystem& hs, HexCenter h);

// Edges of the direction class `d`.
EdgeSet direction_class(const HexSystem& hs, Direction d);

// No vertex lies on three hexagons.
bool is_catacondensed(const HexSystem& hs);

struct DualEdge {
  int a;     // hexagon index
  int b;     // hexagon index or DualGraph::exterior()
  int edge;  // crossed edge of the hexagonal system
};

// Hexagon centers plus one exterior vertex; one dual edge per edge of the
// system, in canonical order of the crossed edges.
class DualGraph {
public:
  explicit DualGraph(const HexSystem& hs);
  int num_vertices() const { return n_ + 1; }
  int exterior() const { return n_; }
  std::span<const DualEdge> edges() const { return edges_; }
  int degree(int x) const;
private:
  int n_;
  std::vector<DualEdge> edges_;
};

inline DualGraph dual_graph(const HexSystem& hs) { return DualGraph(hs); }

struct BoundaryCycle {
  std::vector<int> vertices;  // closed walk without the repeated start
  std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]
};

// The cycle bounding the exterior face, starting at its smallest vertex.
BoundaryCycle peripheral_cycle(const HexSystem& hs);

// HEXSYS text format.
std::string serialize(const HexSystem& hs);
HexSystem parse_hexsys(std::string_view text);

// Edge-set text format: one "x1 y1 x2 y2" per line.  Cut lists separate
// blocks by blank lines.
std::string format_edge_set(const HexSystem& hs, const EdgeSet& s);
EdgeSet parse_edge_set(const HexSystem& hs, std::string_view text);
std::string format_cut_list(const HexSystem& hs, const std::vector<EdgeSet>& cuts);
std::vector<EdgeSet> parse_cut_list(const HexSystem& hs, std::string_view text);

} // namespace hexforce

#endif
