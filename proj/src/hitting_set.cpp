#include <hexforce/hitting_set.hpp>

#include <algorithm>

#include <hexforce/error.hpp>

namespace hexforce {

std::vector<EdgeSet> minimal_constraints(std::vector<EdgeSet> constraints) {
  std::vector<std::pair<std::size_t, EdgeSet>> keyed;
  keyed.reserve(constraints.size());
  for (auto& c : constraints)
    keyed.emplace_back(c.size(), std::move(c));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  std::vector<EdgeSet> kept;
  for (auto& [size, c] : keyed) {
    bool redundant = false;
    for (const EdgeSet& k : kept)
      if (k.is_subset_of(c)) {
        redundant = true;
        break;
      }
    if (!redundant)
      kept.push_back(std::move(c));
  }
  return kept;
}

namespace {

class Solver {
public:
  Solver(std::size_t universe, std::vector<EdgeSet> cons)
    : universe_(universe), cons_(std::move(cons)) {}

  // Can the constraints listed in `unhit` be hit by at most `budget`
  // edges from `allowed`?  Chosen edges are appended to `chosen`.
  bool feasible(const std::vector<int>& unhit, EdgeSet& allowed, int budget, EdgeSet& chosen) {
    if (unhit.empty())
      return true;
    if (budget <= 0)
      return false;

    int pick = -1;
    std::size_t best = universe_ + 1;
    for (int i : unhit) {
      std::size_t n = (cons_[i] & allowed).size();
      if (n < best) {
        best = n;
        pick = i;
        if (n == 0)
          return false;
      }
    }

    // disjoint packing lower bound
    EdgeSet used(universe_);
    int packed = 0;
    for (int i : unhit) {
      EdgeSet r = cons_[i] & allowed;
      if (!r.intersects(used)) {
        used |= r;
        if (++packed > budget)
          return false;
      }
    }

    EdgeSet branch = cons_[pick] & allowed;
    std::vector<int> dropped;
    bool ok = false;
    for (int e : branch.to_vector()) {
      std::vector<int> child;
      child.reserve(unhit.size());
      for (int i : unhit)
        if (!cons_[i].contains(e))
          child.push_back(i);
      chosen.insert(e);
      allowed.erase(e);
      dropped.push_back(e);
      if (feasible(child, allowed, budget - 1, chosen)) {
        ok = true;
        break;
      }
      chosen.erase(e);
    }
    for (int e : dropped)
      allowed.insert(e);
    return ok;
  }

  std::size_t packing_bound() const {
    EdgeSet used(universe_);
    std::size_t packed = 0;
    for (const EdgeSet& c : cons_)
      if (!c.intersects(used)) {
        used |= c;
        ++packed;
      }
    return packed;
  }

  const std::vector<EdgeSet>& constraints() const { return cons_; }

private:
  std::size_t universe_;
  std::vector<EdgeSet> cons_;
};

EdgeSet full(std::size_t universe) {
  EdgeSet s(universe);
  for (std::size_t e = 0; e < universe; ++e)
    s.insert(static_cast<int>(e));
  return s;
}

} // namespace

HittingSetResult minimum_hitting_set(std::size_t universe, std::vector<EdgeSet> constraints) {
  for (const EdgeSet& c : constraints)
    if (c.empty())
      fail(ErrorKind::Internal, "empty constraint in hitting set instance");
  Solver solver(universe, minimal_constraints(std::move(constraints)));

  std::vector<int> all(solver.constraints().size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<int>(i);

  int k = static_cast<int>(solver.packing_bound());
  while (true) {
    EdgeSet allowed = full(universe);
    EdgeSet scratch(universe);
    if (solver.feasible(all, allowed, k, scratch))
      break;
    ++k;
  }

  // Lexicographically least set of size k: fix members one at a time,
  // smallest first, keeping the rest completable with larger edges.
  EdgeSet chosen(universe);
  std::vector<int> unhit = all;
  int last = -1;
  for (int t = 0; t < k && !unhit.empty(); ++t) {
    bool placed = false;
    for (int e = last + 1; e < static_cast<int>(universe); ++e) {
      std::vector<int> rest;
      for (int i : unhit)
        if (!solver.constraints()[i].contains(e))
          rest.push_back(i);
      if (rest.size() == unhit.size())
        continue;  // e hits nothing new; a smaller optimal set would exist
      EdgeSet allowed(universe);
      for (int x = e + 1; x < static_cast<int>(universe); ++x)
        allowed.insert(x);
      EdgeSet scratch(universe);
      if (solver.feasible(rest, allowed, k - t - 1, scratch)) {
        chosen.insert(e);
        unhit = std::move(rest);
        last = e;
        placed = true;
        break;
      }
    }
    if (!placed)
      fail(ErrorKind::Internal, "hitting set witness reconstruction failed");
  }
  return {static_cast<std::size_t>(k), chosen};
}

} // namespace hexforce
