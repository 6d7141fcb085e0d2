#include "balance/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace balance {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(count());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b) {
  assert(a.universe_ == b.universe_);
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
  }
  return total;
}

}  // namespace balance
