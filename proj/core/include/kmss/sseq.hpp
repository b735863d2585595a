#pragma once

// The Bousfield-Kan spectral sequence for BK(A) = hocolim BK_J(A):
// E_2 pages from derived limits of parabolic invariants, the arithmetic of
// the Adams-operation argument (psi^* is multiplication by p^j on
// E^{i,2j}), collapse certificates, and the consistency reports built on
// top of them.

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "kmss/holim.hpp"
#include "kmss/system.hpp"

namespace kmss {

inline constexpr std::size_t kDefaultPrimeSamples = 25;

struct BigradedPage {
  unsigned long q = 0;
  Coefficients coefficients;
  std::size_t column_bound = 0;  // c_max
  std::size_t j_max = 0;
  std::map<std::pair<std::size_t, std::size_t>, DegreeCohomology> entries;  // (i, j)

  // Zero outside the stored range (odd j, i > c_max, j > j_max).
  DegreeCohomology at(std::size_t i, std::size_t j) const;
};

BigradedPage e2_page(const KacMoodySystem& system, unsigned long q, std::size_t j_max);
BigradedPage e2_page(const KacMoodySystem& system, unsigned long q, std::size_t j_max,
                     Coefficients coefficients);

// { r >= 2 : (q-1) | (r-1), 2r-1 <= c_max }, ascending. Differentials d_k
// with k even never occur.
std::vector<std::size_t> admissible_odd_differentials(unsigned long q, std::size_t column_bound);

unsigned long primitive_root(unsigned long q);

struct TorsionBound {
  unsigned long q = 0;
  unsigned exponent = 0;  // bound is q^exponent
  std::vector<unsigned long> primes;  // sampled p
  std::vector<unsigned> valuations;   // v_q(p^{r-1} - 1), per sampled p

  BigInt value() const;
};

// From p^{j-r+1}(p^{r-1}-1) d_{2r-1}(x) = 0 for each admissible p: the
// image of d_{2r-1} is killed by q^e with e the least v_q(p^{r-1}-1) over
// the first `samples` primes p != q that are not torsion primes of W.
TorsionBound torsion_exponent_bound(const KacMoodySystem& system, unsigned long q, std::size_t r,
                                    std::size_t j, std::size_t samples = kDefaultPrimeSamples);

enum class CollapseReason { PrimeBound, WindowEmpty, NotCertified };

// Serialized names: PaperCriterion (2q >= n+1), WindowEmpty, NotCertified.
std::string_view reason_name(CollapseReason reason);

struct CollapseCertificate {
  bool collapsed = false;
  CollapseReason reason = CollapseReason::NotCertified;
  std::size_t n = 0;
  unsigned long q = 0;
  std::size_t column_bound = 0;
  bool torsion_prime = false;
  std::vector<std::size_t> admissible_differentials;  // r values; d_{2r-1}
  std::map<std::size_t, unsigned> torsion_bounds;     // r -> exponent of q
};

// Pure decision on (n, q, c_max); torsion bounds are left empty.
CollapseCertificate certify_collapse(std::size_t n, unsigned long q, std::size_t column_bound,
                                     bool torsion_prime);

CollapseCertificate collapse_certificate(const KacMoodySystem& system, unsigned long q,
                                         std::size_t samples = kDefaultPrimeSamples);

struct TotalDegree {
  std::size_t k = 0;
  DegreeCohomology group;
};

// H^k(BK(A); Z_(q)) = (+)_{i+j=k} E_2^{i,j} for k <= k_max. Throws
// NotCollapsed without a certificate, BadPrime for torsion primes.
std::vector<TotalDegree> poincare_series_bk(const KacMoodySystem& system, unsigned long q,
                                            std::size_t k_max);
// Antidiagonal sums of an already computed page.
std::vector<TotalDegree> assemble_total_degrees(const BigradedPage& page, std::size_t k_max);

struct UctRow {
  std::size_t degree = 0;
  std::size_t field_dimension = 0;  // over F_q
  std::size_t tensor_count = 0;     // free rank + #torsion in this degree
  std::size_t tor_count = 0;        // #torsion one degree up
  bool ok() const { return field_dimension == tensor_count + tor_count; }
};

struct UctReport {
  bool consistent = true;
  std::vector<UctRow> rows;
};

// Universal coefficients on one integral complex of free modules:
// dim H^i(C (x) F_q) = dim(H^i(C) (x) F_q) + dim Tor(H^{i+1}(C), F_q).
// The mod-q side is computed by elimination mod q, independently of SNF.
UctReport uct_check(const CochainComplex& complex, unsigned long q);

// The same identity summed along the antidiagonals i + j = k of the E_2
// pages over Z_(q) and over F_q. Throws NotCollapsed without a certificate.
UctReport uct_consistency(const KacMoodySystem& system, unsigned long q, std::size_t k_max);

struct RestrictionRow {
  std::size_t degree = 0;  // cohomological j = 2m
  std::size_t column_zero_rank = 0;
  std::size_t weyl_invariant_rank = 0;
  bool lattice_match = false;  // lim^0 projected to F(empty) equals the W-invariant lattice
};

struct RestrictionReport {
  bool consistent = true;
  std::size_t nilpotency_bound = 0;  // products of this many positive-column classes vanish
  std::vector<RestrictionRow> rows;
};

RestrictionReport restriction_analysis(const KacMoodySystem& system, unsigned long q,
                                       std::size_t j_max);

struct SerreCell {
  std::size_t i = 0;
  std::size_t j = 0;
  DegreeCohomology derived_limit;
  DegreeCohomology group_cohomology;
  bool equal() const { return derived_limit == group_cohomology; }
};

struct SerreReport {
  bool consistent = true;
  std::vector<SerreCell> cells;
};

SerreReport serre_comparison(const KacMoodySystem& system, unsigned long q, std::size_t i_max,
                             std::size_t j_max);

}  // namespace kmss
