#include "kmss/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmss/linalg.hpp"
#include "kmss/weyl.hpp"

namespace kmss {

namespace {

void enumerate_exponents(std::size_t rank, std::size_t remaining, SymPower::Exponents& cur,
                         std::vector<SymPower::Exponents>& out) {
  const std::size_t pos = cur.size();
  if (pos + 1 == rank) {
    cur.push_back(static_cast<unsigned>(remaining));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t e = 0; e <= remaining; ++e) {
    cur.push_back(static_cast<unsigned>(e));
    enumerate_exponents(rank, remaining - e, cur, out);
    cur.pop_back();
  }
}

// Degrevlex, same total degree: a > b iff the last nonzero entry of a - b
// is negative.
bool degrevlex_greater(const SymPower::Exponents& a, const SymPower::Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

using Polynomial = std::map<SymPower::Exponents, BigInt>;

Polynomial multiply_linear(const Polynomial& p, const std::vector<std::int64_t>& linear) {
  Polynomial out;
  for (const auto& [mono, coeff] : p)
    for (std::size_t l = 0; l < linear.size(); ++l) {
      if (linear[l] == 0) continue;
      auto e = mono;
      ++e[l];
      out[e] += coeff * static_cast<long>(linear[l]);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

SymPower::SymPower(std::size_t lattice_rank, std::size_t degree) : rank_(lattice_rank), degree_(degree) {
  if (rank_ == 0) {
    if (degree_ == 0) basis_.push_back({});
  } else {
    Exponents cur;
    enumerate_exponents(rank_, degree_, cur, basis_);
  }
  std::sort(basis_.begin(), basis_.end(), degrevlex_greater);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

BigInt sym_dimension(std::size_t lattice_rank, std::size_t degree) {
  if (lattice_rank == 0) return degree == 0 ? 1 : 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), degree + lattice_rank - 1, lattice_rank - 1);
  return b;
}

ZMatrix sym_action(const SymPower& sym, const IntMatrix& w) {
  const std::size_t r = sym.lattice_rank();
  if (w.rows() != r || w.cols() != r) throw std::invalid_argument("sym_action: rank mismatch");
  std::vector<std::vector<std::int64_t>> images(r);
  for (std::size_t k = 0; k < r; ++k) images[k] = w.column(k);
  ZMatrix out(sym.dimension(), sym.dimension());
  for (std::size_t col = 0; col < sym.dimension(); ++col) {
    const auto& a = sym.basis()[col];
    Polynomial p{{SymPower::Exponents(r, 0), BigInt(1)}};
    for (std::size_t k = 0; k < r; ++k)
      for (unsigned e = 0; e < a[k]; ++e) p = multiply_linear(p, images[k]);
    for (const auto& [mono, coeff] : p) out(sym.index_of(mono), col) = coeff;
  }
  return out;
}

ZMatrix sym_action(const IntMatrix& w, std::size_t degree) {
  return sym_action(SymPower(w.rows(), degree), w);
}

ZMatrix fixed_lattice(const std::vector<ZMatrix>& generators, std::size_t dimension) {
  if (generators.empty()) return ZMatrix::identity(dimension);
  const ZMatrix id = ZMatrix::identity(dimension);
  std::vector<ZMatrix> blocks;
  for (const auto& g : generators) blocks.push_back(g - id);
  return linalg::kernel_basis(stack_rows(blocks, dimension));
}

InvariantLattice invariant_lattice(const Realization& real, Subset J, std::size_t degree) {
  const SymPower sym(real.rank, degree);
  std::vector<ZMatrix> gens;
  for (std::size_t j : members(J)) gens.push_back(sym_action(sym, simple_reflection(real, j).matrix));
  return InvariantLattice{J, degree, fixed_lattice(gens, sym.dimension())};
}

std::vector<BigInt> inverse_det_series(const IntMatrix& w, std::size_t max_degree) {
  const std::size_t n = w.rows();
  const ZMatrix a = to_big(w);
  // Faddeev-LeVerrier: c[k] is the coefficient of x^k in det(xI - w).
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  ZMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const ZMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    mpz_divexact_ui(trace.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -trace;
  }
  // det(I - t w) = sum_s c[n - s] t^s; invert the power series.
  std::vector<BigInt> q(max_degree + 1, 0);
  q[0] = 1;
  for (std::size_t k = 1; k <= max_degree; ++k)
    for (std::size_t s = 1; s <= std::min(k, n); ++s) q[k] -= c[n - s] * q[k - s];
  return q;
}

std::vector<BigInt> molien_series(const Realization& real, Subset J, std::size_t max_degree,
                                  std::size_t cap) {
  const auto group = enumerate_group(real, J, cap);
  std::vector<BigInt> sum(max_degree + 1, 0);
  for (const auto& w : group) {
    const auto s = inverse_det_series(w.matrix, max_degree);
    for (std::size_t k = 0; k <= max_degree; ++k) sum[k] += s[k];
  }
  const BigInt order = static_cast<unsigned long>(group.size());
  for (auto& x : sum) {
    if (!mpz_divisible_p(x.get_mpz_t(), order.get_mpz_t()))
      throw std::logic_error("Molien average is not integral");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), order.get_mpz_t());
  }
  return sum;
}

InvariantLattice weyl_invariants(const Realization& real, std::size_t degree) {
  ZMatrix basis = invariant_lattice(real, 1U, degree).basis;
  for (std::size_t i = 1; i < real.size(); ++i)
    basis = linalg::intersect_lattices(basis, invariant_lattice(real, Subset{1} << i, degree).basis);
  const Subset all = (Subset{1} << real.size()) - 1;
  return InvariantLattice{all, degree, linalg::canonical_basis(basis)};
}

}  // namespace kmss
