#pragma once

#include <cstddef>
#include <vector>

#include "kmss/gcm.hpp"

namespace kmss {

// Everything derived once from a Cartan matrix and shared by the
// spectral-sequence computations. Immutable after build().
struct KacMoodySystem {
  GeneralizedCartanMatrix cartan;
  Realization realization;
  SphericalPoset poset;
  std::vector<unsigned long> torsion_primes;
  std::size_t group_cap = kDefaultGroupCap;

  static KacMoodySystem build(const GeneralizedCartanMatrix& a, std::size_t cap = kDefaultGroupCap);

  std::size_t size() const noexcept { return cartan.size(); }
  bool is_torsion_prime(unsigned long q) const;
  // Throws InvalidArgument if q is not a prime, BadPrime if q divides some |W_J|.
  void require_good_prime(unsigned long q) const;
};

bool is_prime(unsigned long n);

}  // namespace kmss
