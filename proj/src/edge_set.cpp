#include <hexforce/edge_set.hpp>

#include <algorithm>

namespace hexforce {

std::size_t EdgeSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_)
    n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool EdgeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void EdgeSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool EdgeSet::intersects(const EdgeSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i])
      return true;
  return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i])
      return false;
  return true;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] ^= o.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

int EdgeSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return static_cast<int>(w * 64 + __builtin_ctzll(words_[w]));
  return -1;
}

int EdgeSet::next(int e) const {
  int start = e + 1;
  if (start >= static_cast<int>(universe_))
    return -1;
  std::size_t w = static_cast<std::size_t>(start >> 6);
  std::uint64_t bits = words_[w] & (~std::uint64_t(0) << (start & 63));
  while (true) {
    if (bits)
      return static_cast<int>(w * 64 + __builtin_ctzll(bits));
    if (++w >= words_.size())
      return -1;
    bits = words_[w];
  }
}

std::vector<int> EdgeSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int e) { out.push_back(e); });
  return out;
}

bool operator<(const EdgeSet& a, const EdgeSet& b) {
  // Walk both member sequences in step; the first mismatch decides.
  int x = a.first(), y = b.first();
  while (x != -1 && y != -1) {
    if (x != y)
      return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

std::size_t EdgeSetHash::operator()(const EdgeSet& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : s.words()) {
    h ^= static_cast<std::size_t>(w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
  return h;
}

} // namespace hexforce
