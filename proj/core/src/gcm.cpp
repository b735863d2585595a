#include "kmss/gcm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "kmss/error.hpp"
#include "kmss/linalg.hpp"
#include "kmss/weyl.hpp"

namespace kmss {

std::size_t cardinality(Subset set) { return static_cast<std::size_t>(std::popcount(set)); }

std::vector<std::size_t> members(Subset set) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; set >> i; ++i)
    if (contains(set, i)) out.push_back(i);
  return out;
}

std::string format_subset(Subset set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i : members(set)) {
    os << (first ? "" : ",") << i + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::validate(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::NotSquare, "matrix is empty");
  if (n > 31) throw Error(ErrorCode::InvalidArgument, "index sets larger than 31 are unsupported");
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(n));
  auto at = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = rows[i][j];
      if (i == j) {
        if (a != 2) throw Error(ErrorCode::DiagonalNotTwo, "at " + at(i, j));
      } else if (a > 0) {
        throw Error(ErrorCode::PositiveOffDiagonal, "at " + at(i, j));
      } else if ((a == 0) != (rows[j][i] == 0)) {
        throw Error(ErrorCode::ZeroAsymmetry, "at " + at(i, j) + "/" + at(j, i));
      }
    }
  return GeneralizedCartanMatrix(IntMatrix::from_rows(rows));
}

IntMatrix GeneralizedCartanMatrix::submatrix(Subset J) const {
  const auto idx = members(J);
  IntMatrix sub(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = entries_(idx[r], idx[c]);
  return sub;
}

std::size_t GeneralizedCartanMatrix::rational_rank() const {
  return linalg::rank_bareiss(to_big(entries_));
}

Symmetrization is_symmetrizable(const GCM& a) {
  const std::size_t n = a.size();
  std::vector<std::optional<mpq_class>> d(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start]) continue;
    d[start] = mpq_class(1);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        // d_i a_ij = d_j a_ji
        mpq_class ratio(static_cast<long>(a(i, j)), static_cast<long>(a(j, i)));
        ratio.canonicalize();
        const mpq_class want = *d[i] * ratio;
        if (!d[j]) {
          d[j] = want;
          stack.push_back(j);
        } else if (*d[j] != want) {
          return {};
        }
      }
    }
  }
  Symmetrization out;
  out.symmetrizable = true;
  for (auto& x : d) out.witness.push_back(*x);
  return out;
}

bool is_finite_type(const GCM& a, Subset J) {
  for (Subset minor = J; minor != 0; minor = (minor - 1) & J)
    if (linalg::determinant(to_big(a.submatrix(minor))) <= 0) return false;
  return true;
}

SphericalPoset::SphericalPoset(std::vector<Subset> subsets) : subsets_(std::move(subsets)) {
  std::sort(subsets_.begin(), subsets_.end(), [](Subset x, Subset y) {
    if (cardinality(x) != cardinality(y)) return cardinality(x) < cardinality(y);
    return members(x) < members(y);
  });
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < subsets_.size(); ++a)
    for (std::size_t b = 0; b < subsets_.size(); ++b)
      if (a != b && is_subset(subsets_[a], subsets_[b])) rel.emplace_back(a, b);
  poset_ = FinitePoset(subsets_.size(), rel);
}

std::optional<std::size_t> SphericalPoset::index_of(Subset J) const {
  for (std::size_t i = 0; i < subsets_.size(); ++i)
    if (subsets_[i] == J) return i;
  return std::nullopt;
}

std::vector<Subset> SphericalPoset::maximal_subsets() const {
  std::vector<Subset> out;
  for (Subset J : subsets_) {
    bool maximal = true;
    for (Subset L : subsets_)
      if (L != J && is_subset(J, L)) maximal = false;
    if (maximal) out.push_back(J);
  }
  return out;
}

SphericalPoset spherical_poset(const GCM& a) {
  std::vector<Subset> spherical;
  for (Subset J = 0; J <= a.full_set(); ++J) {
    if (is_finite_type(a, J)) spherical.push_back(J);
    if (J == a.full_set()) break;
  }
  return SphericalPoset(std::move(spherical));
}

Realization realization(const GCM& a) {
  const std::size_t n = a.size();
  const std::size_t rk = a.rational_rank();
  Realization real;
  real.cartan = a.entries();
  real.rank = 2 * n - rk;

  // Greedy completion: append unit columns e_t (t ascending) to A^T while
  // they raise the rank, until the n roots are independent.
  ZMatrix block = to_big(a.entries().transpose());
  std::vector<std::size_t> extra;
  for (std::size_t t = 0; t < n && extra.size() < n - rk; ++t) {
    ZMatrix trial(n, block.cols() + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) trial(i, j) = block(i, j);
      trial(i, block.cols()) = (i == t) ? 1 : 0;
    }
    if (linalg::rank_bareiss(trial) > linalg::rank_bareiss(block)) {
      block = std::move(trial);
      extra.push_back(t);
    }
  }

  real.roots = IntMatrix(n, real.rank);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) real.roots(j, i) = a(i, j);
    for (std::size_t s = 0; s < extra.size(); ++s) real.roots(j, n + s) = (extra[s] == j) ? 1 : 0;
  }
  real.coroots = IntMatrix(real.rank, n);
  for (std::size_t i = 0; i < n; ++i) real.coroots(i, i) = 1;

  ZMatrix ones(n, 1, BigInt(1));
  auto h = linalg::solve_rational(to_big(real.roots), ones);
  BigInt denom = 1;
  for (std::size_t t = 0; t < real.rank; ++t) denom = lcm(denom, (*h)(t, 0).get_den());
  for (std::size_t t = 0; t < real.rank; ++t) {
    const mpq_class scaled = (*h)(t, 0) * denom;
    real.height.push_back(scaled.get_num().get_si());
  }
  return real;
}

std::vector<unsigned long> torsion_primes(const GCM& a, std::size_t cap) {
  const Realization real = realization(a);
  std::vector<unsigned long> primes;
  for (Subset J : spherical_poset(a).maximal_subsets()) {
    unsigned long order = enumerate_group(real, J, cap).size();
    for (unsigned long p = 2; p * p <= order; ++p)
      if (order % p == 0) {
        primes.push_back(p);
        while (order % p == 0) order /= p;
      }
    if (order > 1) primes.push_back(order);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace kmss
