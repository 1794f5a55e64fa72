#include <hexforce/families.hpp>

#include <sstream>

#include <hexforce/bounds.hpp>
#include <hexforce/forcing.hpp>

namespace hexforce {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Parallelogram: return "parallelogram";
    case Family::Hexagon: return "hexagon";
    case Family::OblateRect: return "oblate";
    case Family::ProlateRect: return "prolate";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Parallelogram, Family::Hexagon, Family::OblateRect,
                   Family::ProlateRect})
    if (to_string(f) == name)
      return f;
  fail(ErrorKind::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

std::string to_string(const FamilySpec& s) {
  std::string out = std::string(to_string(s.family)) + "(" + std::to_string(s.p);
  if (s.family != Family::Hexagon)
    out += "," + std::to_string(s.q);
  return out + ")";
}

void validate(const FamilySpec& s) {
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::InvalidSpec, to_string(s) + ": " + why);
  };
  if (s.p < 1)
    bad("p must be positive");
  if (s.family == Family::Hexagon)
    return;
  if (s.q < 1)
    bad("q must be positive");
  if ((s.family == Family::OblateRect || s.family == Family::ProlateRect) && s.p % 2 == 0)
    bad("p must be odd");
  if (s.family == Family::ProlateRect && s.p > 1 && s.q < 2)
    bad("q must be at least 2 when p > 1");
}

namespace {

int row_width(const FamilySpec& s, int i) {
  switch (s.family) {
    case Family::Parallelogram: return s.q;
    case Family::Hexagon: return i <= s.p ? s.p + i - 1 : 3 * s.p - 1 - i;
    case Family::OblateRect: return i % 2 ? s.q : s.q + 1;
    case Family::ProlateRect: return i % 2 || s.p == 1 ? s.q : s.q - 1;
  }
  return 0;
}

int row_count(const FamilySpec& s) {
  return s.family == Family::Hexagon ? 2 * s.p - 1 : s.p;
}

int center_x(const FamilySpec& s, int i, int j) {
  switch (s.family) {
    case Family::Parallelogram: return 2 * (j - 1) - (i - 1);
    case Family::Hexagon:
      return i <= s.p ? 2 * (j - 1) - (i - 1) : 2 * (j - 1) + i - (2 * s.p - 1);
    case Family::OblateRect: return 2 * (j - 1) - (i % 2 ? 0 : 1);
    case Family::ProlateRect: return 2 * (j - 1) + (i % 2 ? 0 : 1);
  }
  return 0;
}

// Index ranges "from a to b" are empty when b < a.
template <typename F>
void each(int a, int b, F&& f) {
  for (int i = a; i <= b; ++i)
    f(i);
}

// Floor division for the range limits, which may be negative.
int fdiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

class Builder {
public:
  explicit Builder(const FamilyInstance& inst) : inst_(inst), hs_(inst.hs) {
    for (const auto& [rc, c] : inst.index)
      row_of_[*hs_.hexagon_index(c)] = rc.i;
    edges = hs_.empty_set();
  }

  int hex(int i, int j) const {
    auto it = inst_.index.find({i, j});
    if (it == inst_.index.end())
      fail(ErrorKind::Internal, "construction names a missing hexagon");
    return *hs_.hexagon_index(it->second);
  }

  void add(Role r, int i, int j) { cur_.insert(hs_.hexagon_edge(hex(i, j), r)); }

  // Edges shared by a hexagon of row a and a hexagon of row b.
  void common(int a, int b) {
    for (int e = 0; e < hs_.num_edges(); ++e) {
      auto [h1, h2] = hs_.edge_hexagons(e);
      if (h2 < 0)
        continue;
      int r1 = row_of_.at(h1), r2 = row_of_.at(h2);
      if ((r1 == a && r2 == b) || (r1 == b && r2 == a))
        cur_.insert(e);
    }
  }

  // Vertical edges of row r; only those inside the system when `inner`.
  void verticals(int r, bool inner) {
    for (const auto& [h, row] : row_of_) {
      if (row != r)
        continue;
      for (Role role : {Role::L, Role::R}) {
        int e = hs_.hexagon_edge(h, role);
        if (!inner || !hs_.is_peripheral(e))
          cur_.insert(e);
      }
    }
  }

  // Closes the current block.
  void cut() {
    if (cur_.empty())
      return;
    edges |= cur_;
    cuts.push_back(cur_);
    cur_ = hs_.empty_set();
  }

  void start() { cur_ = hs_.empty_set(); }

  EdgeSet edges;
  std::vector<EdgeSet> cuts;

private:
  const FamilyInstance& inst_;
  const HexSystem& hs_;
  std::map<int, int> row_of_;
  EdgeSet cur_;
};

void build_parallelogram(Builder& b, int p, int q) {
  b.start();
  switch (p % 3) {
    case 0:
      each(0, (p - 3) / 3, [&](int i) {
        b.common(3 * i + 1, 3 * i + 2);
        b.add(Role::BR, 3 * i + 1, q);
        b.add(Role::TL, 3 * i + 2, 1);
        b.verticals(3 * i + 3, true);
      });
      b.add(Role::TL, p, q);
      break;
    case 1:
      each(0, (p - 1) / 3, [&](int i) {
        b.verticals(3 * i + 1, true);
        b.add(Role::BR, 3 * i + 1, 1);
        b.add(Role::TL, 3 * i + 1, q);
      });
      each(0, fdiv(p - 4, 3), [&](int i) { b.common(3 * i + 2, 3 * i + 3); });
      break;
    case 2:
      each(0, (p - 2) / 3, [&](int i) {
        b.common(3 * i + 1, 3 * i + 2);
        b.add(Role::BR, 3 * i + 1, q);
        b.add(Role::TL, 3 * i + 2, 1);
      });
      each(0, fdiv(p - 5, 3), [&](int i) { b.verticals(3 * i + 3, true); });
      break;
  }
  b.cut();
}

// The lower-half cut L_i shared by all three residues.
void hexagon_lower(Builder& b, int p, int i) {
  b.common(3 * i + 1, 3 * i + 2);
  b.verticals(3 * i + 3, true);
  b.add(Role::BR, 3 * i + 3, 1);
  b.add(Role::BL, 3 * i + 3, p + 3 * i + 2);
  b.cut();
}

// Upper-half cut starting at row r, whose width is w.
void hexagon_upper(Builder& b, int r, int w) {
  b.verticals(r, true);
  b.add(Role::TR, r, 1);
  b.add(Role::TL, r, w);
  b.common(r + 1, r + 2);
  b.cut();
}

void build_hexagon(Builder& b, int p) {
  b.start();
  if (p == 1) {
    b.add(Role::L, 1, 1);
    b.add(Role::R, 1, 1);
    b.cut();
    return;
  }
  switch (p % 3) {
    case 0:
      each(0, (p - 3) / 3, [&](int i) { hexagon_lower(b, p, i); });
      b.common(p + 1, p + 2);
      b.add(Role::TL, p + 1, 1);
      b.add(Role::TR, p + 1, 2 * p - 2);
      b.cut();
      each(0, fdiv(p - 6, 3), [&](int i) { hexagon_upper(b, p + 3 * i + 3, 2 * p - 3 * i - 4); });
      break;
    case 1:
      each(0, (p - 4) / 3, [&](int i) {
        hexagon_lower(b, p, i);
        hexagon_upper(b, p + 3 * i + 1, 2 * p - 3 * i - 2);
      });
      b.verticals(p, false);
      b.cut();
      break;
    case 2:
      each(0, fdiv(p - 5, 3), [&](int i) {
        hexagon_lower(b, p, i);
        hexagon_upper(b, p + 3 * i + 2, 2 * p - 3 * i - 3);
      });
      b.common(p - 1, p);
      b.add(Role::BL, p, 1);
      b.add(Role::BR, p, 2 * p - 1);
      b.cut();
      b.verticals(p + 1, false);
      b.cut();
      break;
  }
}

void build_oblate(Builder& b, int p, int q) {
  b.start();
  if (q % 3 == 1) {
    each(0, (q - 1) / 3, [&](int j) {
      b.add(Role::L, 1, 3 * j + 1);
      b.add(Role::R, p, 3 * j + 1);
      each(1, (p - 1) / 2, [&](int i) {
        b.add(Role::BR, 2 * i, 3 * j + 1);
        b.add(Role::L, 2 * i, 3 * j + 2);
        b.add(Role::TL, 2 * i, 3 * j + 2);
      });
    });
    each(1, (q - 1) / 3, [&](int j) {
      each(1, (p - 1) / 2, [&](int i) {
        b.add(Role::BL, 2 * i, 3 * j);
        b.add(Role::TR, 2 * i, 3 * j);
      });
      each(1, (p + 1) / 2, [&](int i) { b.add(Role::R, 2 * i - 1, 3 * j - 1); });
    });
    b.cut();
    return;
  }
  b.verticals(1, false);
  b.cut();
  each(1, (p - 1) / 2, [&](int i) {
    b.common(2 * i, 2 * i + 1);
    b.add(Role::TL, 2 * i, 1);
    b.add(Role::TR, 2 * i, q + 1);
    b.cut();
  });
}

void build_prolate(Builder& b, int p, int q) {
  b.start();
  for (int r = 1; r <= p; r += 2) {
    b.verticals(r, true);
    b.add(Role::BR, r, 1);
    b.add(Role::TL, r, q);
    b.cut();
  }
}

} // namespace

FamilyInstance generate(const FamilySpec& s) {
  validate(s);
  std::map<RowCol, HexCenter> index;
  std::vector<HexCenter> centers;
  for (int i = 1; i <= row_count(s); ++i)
    for (int j = 1; j <= row_width(s, i); ++j) {
      HexCenter c{center_x(s, i, j), 3 * (i - 1)};
      index[{i, j}] = c;
      centers.push_back(c);
    }
  return {HexSystem(std::move(centers)), std::move(index)};
}

int formula_cf(const FamilySpec& s) {
  const int n = generate(s).hs.num_hexagons();
  const int p = s.p, q = s.q;
  switch (s.family) {
    case Family::Parallelogram: return p * q + 1;
    case Family::Hexagon: return p % 3 == 2 ? n + 2 : n + 1;
    case Family::OblateRect: return q % 3 == 1 ? n + 1 : n + (p + 1) / 2;
    case Family::ProlateRect: return (p + 1) / 2 * (q + 1);
  }
  return 0;
}

Construction construct_cfs(const FamilySpec& s) {
  FamilyInstance inst = generate(s);
  Builder b(inst);
  switch (s.family) {
    case Family::Parallelogram: build_parallelogram(b, s.p, s.q); break;
    case Family::Hexagon: build_hexagon(b, s.p); break;
    case Family::OblateRect:
      if (s.p == 1)
        build_parallelogram(b, 1, s.q);
      else
        build_oblate(b, s.p, s.q);
      break;
    case Family::ProlateRect: build_prolate(b, s.p, s.q); break;
  }
  return {std::move(b.edges), std::move(b.cuts)};
}

std::string_view to_string(BoundKind b) {
  switch (b) {
    case BoundKind::Hexagons: return "hexagons";
    case BoundKind::Matching: return "matching";
    case BoundKind::Components: return "components";
  }
  return "?";
}

Certificate certify(const FamilySpec& s) {
  FamilyInstance inst = generate(s);
  const HexSystem& hs = inst.hs;
  Construction cons = construct_cfs(s);
  Certificate c;
  c.spec = s;
  c.n = hs.num_hexagons();
  c.construction_size = static_cast<int>(cons.edges.size());
  c.construction_complete = is_complete_forcing_set_nice(hs, cons.edges);
  c.formula = formula_cf(s);
  if (is_normal(hs)) {
    c.hexagon_bound = lower_bound_hexagons(hs);
    c.matching_bound = lower_bound_matching(hs);
  }
  for (const HexSystem& comp : normal_components(hs))
    c.component_bound += lower_bound_hexagons(comp);

  if (!c.hexagon_bound) {
    c.applicable = BoundKind::Components;
    c.bound = c.component_bound;
  } else {
    bool matching = (s.family == Family::Hexagon && s.p % 3 == 2) ||
                    (s.family == Family::OblateRect && s.q % 3 != 1);
    c.applicable = matching ? BoundKind::Matching : BoundKind::Hexagons;
    c.bound = matching ? *c.matching_bound : *c.hexagon_bound;
  }
  c.optimal = c.construction_complete && c.construction_size == c.bound;
  return c;
}

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  out << "family = " << to_string(c.spec) << "\n";
  out << "n = " << c.n << "\n";
  out << "construction = " << c.construction_size
      << (c.construction_complete ? " (complete)" : " (NOT complete)") << "\n";
  out << "formula = " << c.formula << "\n";
  out << "lower bound (hexagons) = " << opt(c.hexagon_bound) << "\n";
  out << "lower bound (matching) = " << opt(c.matching_bound) << "\n";
  out << "lower bound (components) = " << c.component_bound << "\n";
  out << "applicable bound = " << to_string(c.applicable) << " = " << c.bound << "\n";
  out << "verdict = " << (c.optimal ? "OPTIMAL" : "NOT PROVEN") << "\n";
  return out.str();
}

} // namespace hexforce
