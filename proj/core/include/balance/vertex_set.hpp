#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace balance {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Membership set over the dense vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  std::size_t universe() const { return universe_; }

  bool contains(VertexId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }

  // Returns true when v was not already present.
  bool insert(VertexId v) {
    auto& word = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    const bool fresh = (word & bit) == 0;
    word |= bit;
    return fresh;
  }

  void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear();

  std::size_t count() const;
  bool empty() const;

  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Set difference: removes every member of other.
  VertexSet& operator-=(const VertexSet& other);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int offset = std::countr_zero(bits);
        fn(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(offset)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  friend std::size_t symmetric_difference_size(const VertexSet&, const VertexSet&);

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

VertexSet operator|(VertexSet lhs, const VertexSet& rhs);
VertexSet operator&(VertexSet lhs, const VertexSet& rhs);
VertexSet operator-(VertexSet lhs, const VertexSet& rhs);

// |a △ b| without materializing the difference.
std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b);

}  // namespace balance
