#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace kmss {

// A finite poset on objects 0..n-1 with its nerve. Chains of degree i are
// strictly increasing sequences c_0 < ... < c_i, listed in lexicographic
// order of object indices.
class FinitePoset {
 public:
  FinitePoset() = default;

  // `relations` are generating pairs (a, b) meaning a < b; the transitive
  // closure is taken. Throws std::invalid_argument on a cycle.
  FinitePoset(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const noexcept { return size_; }
  bool less(std::size_t a, std::size_t b) const { return less_[a * size_ + b]; }

  // Highest chain degree (number of objects in a longest chain minus one).
  std::size_t max_chain_degree() const noexcept { return chains_.empty() ? 0 : chains_.size() - 1; }
  const std::vector<std::vector<std::size_t>>& chains(std::size_t degree) const;
  std::size_t chain_count(std::size_t degree) const { return chains(degree).size(); }

  std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs() const;
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

 private:
  std::size_t size_ = 0;
  std::vector<bool> less_;
  std::vector<std::vector<std::vector<std::size_t>>> chains_;
};

}  // namespace kmss
