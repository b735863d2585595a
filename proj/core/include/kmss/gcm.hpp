#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmss/matrix.hpp"
#include "kmss/poset.hpp"

namespace kmss {

// Subsets of the index set I = {0, ..., n-1} as bit masks.
using Subset = std::uint32_t;

inline constexpr std::size_t kDefaultMaxRank = 6;
inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

inline bool contains(Subset set, std::size_t i) { return (set >> i) & 1U; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
std::size_t cardinality(Subset set);
std::vector<std::size_t> members(Subset set);

// "{1,3}" with 1-based indices; "{}" for the empty set.
std::string format_subset(Subset set);

// Validated generalized Cartan matrix.
class GeneralizedCartanMatrix {
 public:
  // Checks the axioms entry by entry in row-major order and throws
  // kmss::Error naming the first violation (1-based row, column).
  static GeneralizedCartanMatrix validate(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return entries_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  Subset full_set() const noexcept { return size() == 32 ? ~Subset{0} : (Subset{1} << size()) - 1; }

  // Principal submatrix on J, indices in increasing order.
  IntMatrix submatrix(Subset J) const;
  std::size_t rational_rank() const;

  friend bool operator==(const GeneralizedCartanMatrix&, const GeneralizedCartanMatrix&) = default;

 private:
  explicit GeneralizedCartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {}
  IntMatrix entries_;
};

using GCM = GeneralizedCartanMatrix;

struct Symmetrization {
  bool symmetrizable = false;
  // d with d_i a_ij = d_j a_ji, first entry of each connected component 1.
  // Empty when not symmetrizable.
  std::vector<mpq_class> witness;
};

Symmetrization is_symmetrizable(const GCM& a);

// Finite type of A_J: all principal minors of A_J are positive.
bool is_finite_type(const GCM& a, Subset J);

// The poset S(A) of spherical subsets, ordered by size and then
// lexicographically, together with its nerve.
class SphericalPoset {
 public:
  SphericalPoset() = default;
  explicit SphericalPoset(std::vector<Subset> subsets);

  const std::vector<Subset>& subsets() const noexcept { return subsets_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  Subset subset(std::size_t index) const { return subsets_.at(index); }
  std::optional<std::size_t> index_of(Subset J) const;
  bool contains_subset(Subset J) const { return index_of(J).has_value(); }

  const FinitePoset& poset() const noexcept { return poset_; }
  // Column bound c_max: highest chain degree, which equals the largest
  // spherical subset size because the poset is downward closed.
  std::size_t column_bound() const noexcept { return poset_.max_chain_degree(); }
  std::vector<Subset> maximal_subsets() const;

 private:
  std::vector<Subset> subsets_;
  FinitePoset poset_;
};

SphericalPoset spherical_poset(const GCM& a);

// Integral realization: coroots are the first n standard basis vectors of
// Z^rank, roots are covectors with alpha_j(alpha_i^vee) = a_ij. The Weyl
// group acts on the weight lattice of covectors, written in the dual basis.
struct Realization {
  IntMatrix cartan;      // n x n
  std::size_t rank = 0;  // 2n - rk(A)
  IntMatrix roots;       // n x rank; row j is alpha_j
  IntMatrix coroots;     // rank x n; column i is alpha_i^vee
  // Integer vector h with alpha_k(h) > 0 for every k; a root is positive
  // iff it pairs positively with h.
  std::vector<std::int64_t> height;

  std::size_t size() const noexcept { return cartan.rows(); }
  std::vector<std::int64_t> root(std::size_t j) const { return roots.row(j); }
};

Realization realization(const GCM& a);

// Primes dividing |W_J| for some spherical J, ascending. Enumerates the
// maximal spherical parabolics; throws CapExceeded past `cap` elements.
std::vector<unsigned long> torsion_primes(const GCM& a, std::size_t cap = kDefaultGroupCap);

}  // namespace kmss
