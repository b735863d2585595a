#pragma once

// Higher derived limits of functors on finite posets.
//
// For a contravariant functor F on a finite poset, the cochain complex has
//   C^i = (+) over chains c_0 < ... < c_i of F(c_0),
// with the alternating sum of face maps as differential. Dropping c_0 goes
// through the structure map F(c_1) -> F(c_0); dropping any other object is
// the identity on F(c_0). H^0 is lim F and H^i is lim^i F.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmss/gcm.hpp"
#include "kmss/matrix.hpp"
#include "kmss/poset.hpp"
#include "kmss/system.hpp"

namespace kmss {

class FunctorPresentation {
 public:
  FunctorPresentation(FinitePoset poset, std::vector<std::size_t> ranks);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t rank(std::size_t object) const { return ranks_.at(object); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  // Structure map F(b) -> F(a) for a < b, shaped rank(a) x rank(b).
  void set_map(std::size_t a, std::size_t b, ZMatrix m);
  const ZMatrix& map(std::size_t a, std::size_t b) const;

  // Throws FunctorialityViolation naming the first failing triple, or a
  // missing/misshaped map.
  void check_functoriality() const;

 private:
  FinitePoset poset_;
  std::vector<std::size_t> ranks_;
  std::map<std::pair<std::size_t, std::size_t>, ZMatrix> maps_;
};

struct ChainCoordinate {
  std::size_t chain;  // index into poset().chains(degree)
  std::size_t basis;  // basis vector of F(c_0)
};

struct CochainComplex {
  std::vector<std::size_t> ranks;                    // dim C^i
  std::vector<SparseMatrix> differentials;           // d_i : C^i -> C^{i+1}
  std::vector<std::vector<ChainCoordinate>> ledger;  // per degree, per coordinate

  std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

// Throws FunctorialityViolation if the presentation is not a functor;
// asserts d^2 = 0 on the result.
CochainComplex build_complex(const FunctorPresentation& f);

enum class CoefficientKind { Integer, Rational, ModQ, LocalQ };

struct Coefficients {
  CoefficientKind kind = CoefficientKind::Integer;
  unsigned long q = 0;

  static Coefficients integers() { return {CoefficientKind::Integer, 0}; }
  static Coefficients rationals() { return {CoefficientKind::Rational, 0}; }
  static Coefficients mod(unsigned long q) { return {CoefficientKind::ModQ, q}; }
  static Coefficients local(unsigned long q) { return {CoefficientKind::LocalQ, q}; }

  std::string to_string() const;
  bool is_field() const { return kind == CoefficientKind::Rational || kind == CoefficientKind::ModQ; }
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

struct TorsionDivisor {
  unsigned long prime = 0;
  unsigned exponent = 0;

  BigInt value() const;
  std::string to_string() const;  // "q^e"
  friend auto operator<=>(const TorsionDivisor&, const TorsionDivisor&) = default;
};

struct DegreeCohomology {
  std::size_t free_rank = 0;
  std::vector<TorsionDivisor> torsion;  // ascending

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const DegreeCohomology&, const DegreeCohomology&) = default;
};

struct CohomologyResult {
  Coefficients coefficients;
  std::vector<DegreeCohomology> degrees;

  // Zero beyond the computed range.
  DegreeCohomology at(std::size_t i) const { return i < degrees.size() ? degrees[i] : DegreeCohomology{}; }
};

CohomologyResult cohomology(const CochainComplex& c, Coefficients coefficients);

// Prime-power factors of the invariant factors of a matrix: all primes for
// Integer, the q-part only for LocalQ, nothing over a field.
std::vector<TorsionDivisor> torsion_of(const std::vector<BigInt>& invariants, Coefficients coefficients);

// F(J) = invariant lattice of W_J in Sym^degree, inclusions as maps.
FunctorPresentation invariant_functor(const KacMoodySystem& system, std::size_t degree);

// F(J) = M^{W_J} for a W-lattice M given by the matrices of the r_i.
FunctorPresentation fixed_point_functor(const KacMoodySystem& system,
                                        const std::vector<ZMatrix>& generator_action);

// lim^i H^j(BK_J) over Z_(q) (or `coefficients` when given). Odd j gives the
// zero result. Throws BadPrime when q is a torsion prime of W.
CohomologyResult lim_of_invariants(const KacMoodySystem& system, unsigned long q, std::size_t j);
CohomologyResult lim_of_invariants(const KacMoodySystem& system, unsigned long q, std::size_t j,
                                   Coefficients coefficients);

// H^i(W; M) = lim^i M^{W_J} over Z_(q), i <= i_max. Throws BadPrime, and
// InvalidRepresentation if the matrices violate the Coxeter relations.
CohomologyResult group_cohomology_weyl(const KacMoodySystem& system,
                                       const std::vector<ZMatrix>& generator_action,
                                       unsigned long q, std::size_t i_max);

}  // namespace kmss
