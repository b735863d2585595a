#include "kmss/system.hpp"

#include <algorithm>

#include "kmss/error.hpp"

namespace kmss {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

KacMoodySystem KacMoodySystem::build(const GeneralizedCartanMatrix& a, std::size_t cap) {
  return KacMoodySystem{a, kmss::realization(a), spherical_poset(a), kmss::torsion_primes(a, cap), cap};
}

bool KacMoodySystem::is_torsion_prime(unsigned long q) const {
  return std::binary_search(torsion_primes.begin(), torsion_primes.end(), q);
}

void KacMoodySystem::require_good_prime(unsigned long q) const {
  if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime");
  if (is_torsion_prime(q))
    throw Error(ErrorCode::BadPrime, std::to_string(q) + " divides the order of a finite parabolic W_J");
}

}  // namespace kmss
