#include "kmss/holim.hpp"

#include <algorithm>
#include <sstream>

#include "kmss/error.hpp"
#include "kmss/invariants.hpp"
#include "kmss/linalg.hpp"
#include "kmss/weyl.hpp"

namespace kmss {

FunctorPresentation::FunctorPresentation(FinitePoset poset, std::vector<std::size_t> ranks)
    : poset_(std::move(poset)), ranks_(std::move(ranks)) {
  if (ranks_.size() != poset_.size())
    throw std::invalid_argument("functor presentation: one rank per object required");
}

void FunctorPresentation::set_map(std::size_t a, std::size_t b, ZMatrix m) {
  if (!poset_.less(a, b)) throw std::invalid_argument("set_map: objects are not comparable");
  maps_[{a, b}] = std::move(m);
}

const ZMatrix& FunctorPresentation::map(std::size_t a, std::size_t b) const {
  auto it = maps_.find({a, b});
  if (it == maps_.end())
    throw Error(ErrorCode::FunctorialityViolation,
                "missing structure map " + std::to_string(a) + " < " + std::to_string(b));
  return it->second;
}

void FunctorPresentation::check_functoriality() const {
  for (const auto& [a, b] : poset_.comparable_pairs()) {
    const ZMatrix& m = map(a, b);
    if (m.rows() != rank(a) || m.cols() != rank(b))
      throw Error(ErrorCode::FunctorialityViolation,
                  "structure map " + std::to_string(a) + " < " + std::to_string(b) + " is misshaped");
  }
  for (const auto& chain : poset_.chains(2)) {
    const std::size_t a = chain[0], b = chain[1], c = chain[2];
    if (map(a, b) * map(b, c) != map(a, c))
      throw Error(ErrorCode::FunctorialityViolation, "triple " + std::to_string(a) + " < " +
                                                         std::to_string(b) + " < " + std::to_string(c));
  }
}

CochainComplex build_complex(const FunctorPresentation& f) {
  f.check_functoriality();
  const FinitePoset& poset = f.poset();
  const std::size_t top = poset.max_chain_degree();
  CochainComplex c;
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> chain_index(top + 1);
  for (std::size_t i = 0; i <= top && poset.size() > 0; ++i) {
    std::size_t total = 0;
    std::vector<ChainCoordinate> ledger;
    const auto& chains = poset.chains(i);
    for (std::size_t s = 0; s < chains.size(); ++s) {
      offsets[i].push_back(total);
      chain_index[i][chains[s]] = s;
      const std::size_t r = f.rank(chains[s].front());
      for (std::size_t b = 0; b < r; ++b) ledger.push_back({s, b});
      total += r;
    }
    c.ranks.push_back(total);
    c.ledger.push_back(std::move(ledger));
  }

  for (std::size_t i = 0; i + 1 < c.ranks.size(); ++i) {
    SparseMatrix d(c.ranks[i + 1], c.ranks[i]);
    const auto& chains = poset.chains(i + 1);
    for (std::size_t s = 0; s < chains.size(); ++s) {
      const auto& sigma = chains[s];
      const std::size_t row0 = offsets[i + 1][s];
      const std::size_t head = f.rank(sigma[0]);
      for (std::size_t t = 0; t < sigma.size(); ++t) {
        std::vector<std::size_t> face = sigma;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
        const std::size_t col0 = offsets[i][chain_index[i].at(face)];
        const BigInt sign = (t % 2 == 0) ? 1 : -1;
        if (t == 0) {
          const ZMatrix& m = f.map(sigma[0], sigma[1]);
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t k = 0; k < m.cols(); ++k)
              if (m(r, k) != 0) d.add(row0 + r, col0 + k, sign * m(r, k));
        } else {
          for (std::size_t r = 0; r < head; ++r) d.add(row0 + r, col0 + r, sign);
        }
      }
    }
    c.differentials.push_back(std::move(d));
  }
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i)
    if (!(c.differentials[i + 1] * c.differentials[i]).is_zero())
      throw std::logic_error("cochain complex: d^2 != 0 in degree " + std::to_string(i));
  return c;
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case CoefficientKind::Integer: return "Z";
    case CoefficientKind::Rational: return "Q";
    case CoefficientKind::ModQ: return "F_" + std::to_string(q);
    case CoefficientKind::LocalQ: return "Z_(" + std::to_string(q) + ")";
  }
  return "?";
}

BigInt TorsionDivisor::value() const {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), prime, exponent);
  return v;
}

std::string TorsionDivisor::to_string() const {
  return std::to_string(prime) + "^" + std::to_string(exponent);
}

std::vector<TorsionDivisor> torsion_of(const std::vector<BigInt>& invariants, Coefficients coefficients) {
  std::vector<TorsionDivisor> out;
  if (coefficients.is_field()) return out;
  for (BigInt d : invariants) {
    d = abs(d);
    if (d <= 1) continue;
    if (coefficients.kind == CoefficientKind::LocalQ) {
      if (const unsigned v = linalg::valuation(d, coefficients.q); v > 0) out.push_back({coefficients.q, v});
      continue;
    }
    for (unsigned long p = 2; d > 1; ++p) {
      if (BigInt(p) * p > d) {
        out.push_back({d.get_ui(), 1});
        break;
      }
      if (const unsigned v = linalg::valuation(d, p); v > 0) {
        out.push_back({p, v});
        BigInt pp;
        mpz_ui_pow_ui(pp.get_mpz_t(), p, v);
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CohomologyResult cohomology(const CochainComplex& c, Coefficients coefficients) {
  CohomologyResult result{coefficients, {}};
  const std::size_t n = c.ranks.size();
  std::vector<std::size_t> rank(n, 0);
  std::vector<std::vector<TorsionDivisor>> torsion(n);
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    if (coefficients.kind == CoefficientKind::ModQ) {
      rank[i] = linalg::rank_mod_p(c.differentials[i], coefficients.q);
    } else {
      const auto inv = linalg::smith_invariants(c.differentials[i]);
      rank[i] = inv.size();
      torsion[i + 1] = torsion_of(inv, coefficients);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t incoming = i > 0 ? rank[i - 1] : 0;
    result.degrees.push_back({c.ranks[i] - rank[i] - incoming, torsion[i]});
  }
  return result;
}

namespace {

FunctorPresentation lattice_functor(const SphericalPoset& poset, const std::vector<ZMatrix>& bases) {
  std::vector<std::size_t> ranks;
  for (const auto& b : bases) ranks.push_back(b.cols());
  FunctorPresentation f(poset.poset(), ranks);
  for (const auto& [a, b] : poset.poset().comparable_pairs()) {
    auto m = linalg::solve_integral(bases[a], bases[b]);
    if (!m) throw std::logic_error("invariant lattices are not nested");
    f.set_map(a, b, std::move(*m));
  }
  return f;
}

CohomologyResult zero_result(std::size_t degrees, Coefficients coefficients) {
  return CohomologyResult{coefficients, std::vector<DegreeCohomology>(degrees)};
}

}  // namespace

FunctorPresentation invariant_functor(const KacMoodySystem& system, std::size_t degree) {
  std::vector<ZMatrix> bases;
  for (Subset J : system.poset.subsets())
    bases.push_back(invariant_lattice(system.realization, J, degree).basis);
  return lattice_functor(system.poset, bases);
}

FunctorPresentation fixed_point_functor(const KacMoodySystem& system,
                                        const std::vector<ZMatrix>& generator_action) {
  if (generator_action.size() != system.size())
    throw Error(ErrorCode::InvalidRepresentation, "one matrix per simple reflection required");
  const std::size_t dim = generator_action.front().rows();
  std::vector<ZMatrix> bases;
  for (Subset J : system.poset.subsets()) {
    std::vector<ZMatrix> gens;
    for (std::size_t j : members(J)) gens.push_back(generator_action[j]);
    bases.push_back(fixed_lattice(gens, dim));
  }
  return lattice_functor(system.poset, bases);
}

CohomologyResult lim_of_invariants(const KacMoodySystem& system, unsigned long q, std::size_t j) {
  return lim_of_invariants(system, q, j, Coefficients::local(q));
}

CohomologyResult lim_of_invariants(const KacMoodySystem& system, unsigned long q, std::size_t j,
                                   Coefficients coefficients) {
  system.require_good_prime(q);
  const std::size_t degrees = system.poset.column_bound() + 1;
  if (j % 2 == 1) return zero_result(degrees, coefficients);
  return cohomology(build_complex(invariant_functor(system, j / 2)), coefficients);
}

CohomologyResult group_cohomology_weyl(const KacMoodySystem& system,
                                       const std::vector<ZMatrix>& generator_action,
                                       unsigned long q, std::size_t i_max) {
  system.require_good_prime(q);
  const std::size_t n = system.size();
  if (generator_action.size() != n)
    throw Error(ErrorCode::InvalidRepresentation, "one matrix per simple reflection required");
  const std::size_t dim = generator_action.front().rows();
  const ZMatrix id = ZMatrix::identity(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const ZMatrix& g = generator_action[i];
    if (g.rows() != dim || g.cols() != dim)
      throw Error(ErrorCode::InvalidRepresentation, "generator matrices must be square of equal size");
    if (g * g != id)
      throw Error(ErrorCode::InvalidRepresentation, "r_" + std::to_string(i + 1) + " is not an involution");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      const auto m = coxeter_order(system.cartan, i, k);
      if (!m) continue;
      const ZMatrix prod = generator_action[i] * generator_action[k];
      ZMatrix power = id;
      for (unsigned e = 0; e < *m; ++e) power = power * prod;
      if (power != id)
        throw Error(ErrorCode::InvalidRepresentation,
                    "braid relation fails for r_" + std::to_string(i + 1) + ", r_" + std::to_string(k + 1));
    }
  auto result = cohomology(build_complex(fixed_point_functor(system, generator_action)),
                           Coefficients::local(q));
  result.degrees.resize(i_max + 1);
  return result;
}

}  // namespace kmss
