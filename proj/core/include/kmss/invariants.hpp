#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kmss/gcm.hpp"
#include "kmss/matrix.hpp"

namespace kmss {

// Degree-m symmetric power of a rank-r lattice with its monomial basis in
// descending degrevlex order (x_1 > x_2 > ... > x_r).
class SymPower {
 public:
  using Exponents = std::vector<unsigned>;

  SymPower(std::size_t lattice_rank, std::size_t degree);

  std::size_t lattice_rank() const noexcept { return rank_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Exponents>& basis() const noexcept { return basis_; }
  std::size_t index_of(const Exponents& e) const { return index_.at(e); }

 private:
  std::size_t rank_;
  std::size_t degree_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> index_;
};

// binom(m + r - 1, r - 1)
BigInt sym_dimension(std::size_t lattice_rank, std::size_t degree);

// Matrix of Sym^m(w) on the monomial basis; column a is the expansion of
// the image of x^a.
ZMatrix sym_action(const SymPower& sym, const IntMatrix& w);
ZMatrix sym_action(const IntMatrix& w, std::size_t degree);

struct InvariantLattice {
  Subset J = 0;
  std::size_t degree = 0;
  ZMatrix basis;  // canonical columns inside Sym^degree

  std::size_t rank() const noexcept { return basis.cols(); }
};

// Saturated sublattice of Sym^m fixed by every r_j, j in J.
InvariantLattice invariant_lattice(const Realization& real, Subset J, std::size_t degree);

// Sublattice of a W-lattice fixed by the listed generator matrices.
ZMatrix fixed_lattice(const std::vector<ZMatrix>& generators, std::size_t dimension);

// Dimensions d_0..d_L of W_J-invariants in Sym^m by the Molien average.
std::vector<BigInt> molien_series(const Realization& real, Subset J, std::size_t max_degree,
                                  std::size_t cap = kDefaultGroupCap);

// Truncated power series of 1/det(I - t w), t^0..t^L.
std::vector<BigInt> inverse_det_series(const IntMatrix& w, std::size_t max_degree);

// Invariants of the whole W(A), as the intersection of the invariant
// lattices of the simple reflections.
InvariantLattice weyl_invariants(const Realization& real, std::size_t degree);

}  // namespace kmss
