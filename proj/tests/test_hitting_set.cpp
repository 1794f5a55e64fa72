#include <doctest.h>

#include <functional>
#include <random>

#include <hexforce/error.hpp>
#include <hexforce/hitting_set.hpp>

using namespace hexforce;

namespace {

EdgeSet make(std::size_t u, std::initializer_list<int> xs) {
  EdgeSet s(u);
  for (int x : xs)
    s.insert(x);
  return s;
}

// Least-size, then lexicographically least, hitting set by full scan.
EdgeSet brute(std::size_t u, const std::vector<EdgeSet>& cs) {
  EdgeSet best(u);
  bool found = false;
  for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
    EdgeSet s(u);
    for (std::size_t e = 0; e < u; ++e)
      if (mask >> e & 1)
        s.insert(static_cast<int>(e));
    bool ok = true;
    for (const EdgeSet& c : cs)
      ok = ok && c.intersects(s);
    if (!ok)
      continue;
    if (!found || s.size() < best.size() || (s.size() == best.size() && s < best)) {
      best = s;
      found = true;
    }
  }
  return best;
}

} // namespace

TEST_CASE("hitting set basics") {
  HittingSetResult r = minimum_hitting_set(4, {});
  CHECK(r.size == 0);
  r = minimum_hitting_set(4, {make(4, {0, 1}), make(4, {1, 2}), make(4, {2, 3})});
  CHECK(r.size == 2);
  CHECK(r.witness == make(4, {0, 2}));
  CHECK_THROWS_AS(minimum_hitting_set(3, {EdgeSet(3)}), Error);
}

TEST_CASE("minimal constraints drop supersets and duplicates") {
  auto m = minimal_constraints({make(5, {0, 1}), make(5, {0, 1, 2}), make(5, {0, 1}), make(5, {3})});
  CHECK(m.size() == 2);
}

TEST_CASE("hitting set agrees with brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t u = 3 + rng() % 10;
    std::vector<EdgeSet> cs;
    int k = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < k; ++i) {
      EdgeSet c(u);
      while (c.empty())
        for (std::size_t e = 0; e < u; ++e)
          if (rng() % 3 == 0)
            c.insert(static_cast<int>(e));
      cs.push_back(c);
    }
    EdgeSet want = brute(u, cs);
    HittingSetResult got = minimum_hitting_set(u, cs);
    CHECK(got.size == want.size());
    CHECK(got.witness == want);
  }
}
