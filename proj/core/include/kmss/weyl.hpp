#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kmss/gcm.hpp"
#include "kmss/matrix.hpp"

namespace kmss {

struct WeylElement {
  IntMatrix matrix;               // action on the weight lattice
  std::size_t length = 0;
  std::vector<std::size_t> word;  // lexicographically first reduced word
};

WeylElement simple_reflection(const Realization& real, std::size_t i);

// Order of r_i r_j from a_ij a_ji: 2, 3, 4, 6, or nullopt for infinity.
std::optional<unsigned> coxeter_order(const GCM& a, std::size_t i, std::size_t j);

// Root positivity: a root (as a covector) is positive iff it pairs
// positively with the realization's height vector.
bool is_positive_root(const Realization& real, const std::vector<std::int64_t>& root);

// w(alpha_j) for the element with matrix w.
std::vector<std::int64_t> act_on_root(const Realization& real, const IntMatrix& w, std::size_t j);

// l(w r_j) < l(w), tested by the sign of w(alpha_j).
bool has_right_descent(const Realization& real, const IntMatrix& w, std::size_t j);

// All of W_J by breadth-first search on word length, generators in index
// order. Throws CapExceeded once more than `cap` elements are found.
std::vector<WeylElement> enumerate_group(const Realization& real, Subset J, std::size_t cap);

// Minimal-length representatives of W/W_J up to a length bound.
struct CosetTable {
  Subset J = 0;
  std::vector<std::vector<WeylElement>> by_length;  // index k: length-k reps

  std::size_t max_length() const { return by_length.empty() ? 0 : by_length.size() - 1; }
  const std::vector<WeylElement>& of_length(std::size_t k) const;
};

CosetTable min_coset_reps(const Realization& real, Subset J, std::size_t max_length);

// Coefficients c_0..c_L of the length generating function.
std::vector<std::uint64_t> group_length_series(const Realization& real, Subset J,
                                               std::size_t max_length, std::size_t cap);
std::vector<std::uint64_t> coset_length_series(const Realization& real, Subset J,
                                               std::size_t max_length);

}  // namespace kmss
