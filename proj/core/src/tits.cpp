#include "kmss/tits.hpp"

#include <unordered_map>

namespace kmss {

namespace {

CosetFunctor functor_from_tables(const KacMoodySystem& system, const std::vector<CosetTable>& tables,
                                 std::size_t k) {
  const auto& subsets = system.poset.subsets();
  std::vector<std::vector<WeylElement>> reps;
  std::vector<std::size_t> ranks;
  for (const auto& table : tables) {
    reps.push_back(table.of_length(k));
    ranks.push_back(reps.back().size());
  }
  FunctorPresentation f(system.poset.poset(), ranks);
  std::vector<std::unordered_map<IntMatrix, std::size_t, IntMatrixHash>> position(subsets.size());
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t s = 0; s < reps[a].size(); ++s) position[a][reps[a][s].matrix] = s;
  for (const auto& [a, b] : system.poset.poset().comparable_pairs()) {
    ZMatrix m(ranks[a], ranks[b]);
    for (std::size_t s = 0; s < reps[b].size(); ++s) m(position[a].at(reps[b][s].matrix), s) = 1;
    f.set_map(a, b, std::move(m));
  }
  return CosetFunctor{k, std::move(f), std::move(reps)};
}

std::vector<CosetTable> coset_tables(const KacMoodySystem& system, std::size_t k_max) {
  std::vector<CosetTable> tables;
  for (Subset J : system.poset.subsets()) tables.push_back(min_coset_reps(system.realization, J, k_max));
  return tables;
}

}  // namespace

CosetFunctor coset_functor(const KacMoodySystem& system, std::size_t k) {
  return functor_from_tables(system, coset_tables(system, k), k);
}

std::vector<TitsVerdict> tits_acyclicity(const KacMoodySystem& system, std::size_t k_max,
                                         Coefficients coefficients) {
  const auto tables = coset_tables(system, k_max);
  std::vector<TitsVerdict> verdicts;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto functor = functor_from_tables(system, tables, k);
    const auto complex = build_complex(functor.presentation);
    TitsVerdict v;
    v.k = k;
    v.cochain_ranks = complex.ranks;
    for (std::size_t i = 0; i < complex.ranks.size(); ++i)
      v.euler_characteristic += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.ranks[i]);
    v.cohomology = cohomology(complex, coefficients);
    for (std::size_t i = 0; i < v.cohomology.degrees.size(); ++i) {
      const auto& h = v.cohomology.degrees[i];
      const bool expected_unit = (k == 0 && i == 0);
      const bool ok = expected_unit ? (h.free_rank == 1 && h.torsion.empty()) : h.is_zero();
      if (!ok) v.violations.push_back({k, i, h});
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

}  // namespace kmss
