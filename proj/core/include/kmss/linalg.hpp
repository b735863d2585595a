#pragma once

// Exact integer linear algebra: Smith normal form, Hermite normal form,
// integer kernels, lattice intersections and saturation.
//
// Lattices are given by basis matrices whose *columns* are the basis
// vectors. "Canonical" bases are the transposes of row Hermite normal forms,
// so two bases span the same lattice iff their canonical forms are equal.

#include <cstddef>
#include <optional>
#include <vector>

#include "kmss/matrix.hpp"

namespace kmss::linalg {

using QMatrix = Matrix<mpq_class>;

BigInt determinant(ZMatrix m);

// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt x, unsigned long p);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_bareiss(ZMatrix m);

// Rank over F_p by Gaussian elimination modulo p.
std::size_t rank_mod_p(const SparseMatrix& m, unsigned long p);
std::size_t rank_mod_p(const ZMatrix& m, unsigned long p);

// Nonzero invariant factors d_1 | d_2 | ... (all positive). The number of
// factors is the rank over Q.
std::vector<BigInt> smith_invariants(const SparseMatrix& m);
std::vector<BigInt> smith_invariants(const ZMatrix& m);

// Row Hermite normal form with zero rows removed: pivots positive and
// strictly increasing, entries above a pivot reduced into [0, pivot).
ZMatrix hermite_rows(ZMatrix m);

// Z-basis of {x in Z^cols : m x = 0}, canonical, as columns.
ZMatrix kernel_basis(const ZMatrix& m);

// Canonical basis of the lattice spanned by the columns of `gens`.
ZMatrix canonical_basis(const ZMatrix& gens);

// Saturation (Q-span intersected with Z^d) of the column span.
ZMatrix saturate(const ZMatrix& gens);

// Canonical basis of span(b1) ∩ span(b2).
ZMatrix intersect_lattices(const ZMatrix& b1, const ZMatrix& b2);

// A rational solution X of a X = b (free variables set to zero), if any.
std::optional<QMatrix> solve_rational(const ZMatrix& a, const ZMatrix& b);

// The unique integer X with basis * X = targets. Requires `basis` to have
// full column rank; returns nullopt if no integral solution exists.
std::optional<ZMatrix> solve_integral(const ZMatrix& basis, const ZMatrix& targets);

}  // namespace kmss::linalg
