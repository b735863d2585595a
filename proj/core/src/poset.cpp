#include "kmss/poset.hpp"

#include <stdexcept>

namespace kmss {

FinitePoset::FinitePoset(std::size_t size,
                         const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : size_(size), less_(size * size, false) {
  for (const auto& [a, b] : relations) {
    if (a >= size || b >= size) throw std::invalid_argument("poset relation out of range");
    less_[a * size + b] = true;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (less_[i * size + k])
        for (std::size_t j = 0; j < size; ++j)
          if (less_[k * size + j]) less_[i * size + j] = true;
  for (std::size_t i = 0; i < size; ++i)
    if (less_[i * size + i]) throw std::invalid_argument("poset relations contain a cycle");

  if (size == 0) return;
  std::vector<std::vector<std::size_t>> current;
  for (std::size_t i = 0; i < size; ++i) current.push_back({i});
  while (!current.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& chain : current)
      for (std::size_t j = 0; j < size; ++j)
        if (less(chain.back(), j)) {
          auto longer = chain;
          longer.push_back(j);
          next.push_back(std::move(longer));
        }
    chains_.push_back(std::move(current));
    current = std::move(next);
  }
}

const std::vector<std::vector<std::size_t>>& FinitePoset::chains(std::size_t degree) const {
  static const std::vector<std::vector<std::size_t>> kNone;
  return degree < chains_.size() ? chains_[degree] : kNone;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::comparable_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [a, b] : comparable_pairs()) {
    bool covers = true;
    for (std::size_t m = 0; m < size_ && covers; ++m)
      if (less(a, m) && less(m, b)) covers = false;
    if (covers) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace kmss
