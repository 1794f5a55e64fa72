// Dense bitset over the canonical edge indices of one HexSystem.

#ifndef HEXFORCE_EDGE_SET_HPP_
#define HEXFORCE_EDGE_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hexforce {

class EdgeSet {
public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(int e) { words_[e >> 6] |= bit(e); }
  void erase(int e) { words_[e >> 6] &= ~bit(e); }
  bool contains(int e) const { return (words_[e >> 6] & bit(e)) != 0; }

  std::size_t size() const;
  bool empty() const;
  void clear();

  bool intersects(const EdgeSet& o) const;
  bool is_subset_of(const EdgeSet& o) const;

  EdgeSet& operator|=(const EdgeSet& o);
  EdgeSet& operator&=(const EdgeSet& o);
  EdgeSet& operator^=(const EdgeSet& o);
  // set difference
  EdgeSet& operator-=(const EdgeSet& o);

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  // Smallest member, or -1 when empty.
  int first() const;
  // Smallest member greater than e, or -1.
  int next(int e) const;

  std::vector<int> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Lexicographic order of the ascending member sequences.
  friend bool operator<(const EdgeSet& a, const EdgeSet& b);

  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  static std::uint64_t bit(int e) { return std::uint64_t(1) << (e & 63); }
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept;
};

} // namespace hexforce

#endif
