#pragma once

// Derived limits of k -> H^{2k}(K/K_J) over the spherical poset. The even
// cells of K/K_J are indexed by minimal representatives of W/W_J, and a
// projection K/K_J -> K/K_L pulls the class of a representative w back to
// the class of the same w, so every structure map is a 0/1 basis
// inclusion. The E_2 term of the Tits building splits by k; it should be
// Z in bidegree (0, 0) and vanish elsewhere.

#include <cstddef>
#include <vector>

#include "kmss/holim.hpp"
#include "kmss/system.hpp"
#include "kmss/weyl.hpp"

namespace kmss {

struct CosetFunctor {
  std::size_t k = 0;
  FunctorPresentation presentation;
  // Per poset object, the length-k minimal representatives that form the
  // basis of F(J).
  std::vector<std::vector<WeylElement>> representatives;
};

CosetFunctor coset_functor(const KacMoodySystem& system, std::size_t k);

struct TitsViolation {
  std::size_t k = 0;
  std::size_t i = 0;
  DegreeCohomology found;
};

struct TitsVerdict {
  std::size_t k = 0;
  std::vector<std::size_t> cochain_ranks;
  long long euler_characteristic = 0;
  CohomologyResult cohomology;
  std::vector<TitsViolation> violations;

  bool acyclic() const { return violations.empty(); }
};

// One verdict per k = 0..k_max over the given coefficients.
std::vector<TitsVerdict> tits_acyclicity(const KacMoodySystem& system, std::size_t k_max,
                                         Coefficients coefficients);

}  // namespace kmss
