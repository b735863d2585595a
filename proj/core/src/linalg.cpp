#include "kmss/linalg.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace kmss::linalg {

namespace {

void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src, starting at column `from`.
void sub_row(ZMatrix& m, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from = 0) {
  if (q == 0) return;
  for (std::size_t j = from; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void sub_col(ZMatrix& m, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from = 0) {
  if (q == 0) return;
  for (std::size_t i = from; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::vector<BigInt> smith_dense_inplace(ZMatrix& a) {
  std::vector<BigInt> out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) {
          sub_row(a, i, t, tdiv(a(i, t), a(t, t)), t);
          if (a(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(t, j) != 0) {
          sub_col(a, j, t, tdiv(a(t, j), a(t, t)), t);
          if (a(t, j) != 0) clean = false;
        }
      if (!clean) {
        // A remainder is smaller than the pivot; move it into place.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(br, bc))) { br = i; bc = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(br, bc))) { br = t; bc = j; }
        swap_rows(a, t, br);
        swap_cols(a, t, bc);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

}  // namespace

unsigned valuation(BigInt x, unsigned long p) {
  unsigned v = 0;
  while (x != 0 && mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++v;
  }
  return v;
}

BigInt determinant(ZMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_bareiss(ZMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(m, r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const SparseMatrix& m, unsigned long p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be >= 2");
  using Row = std::vector<std::pair<std::size_t, unsigned long>>;
  std::vector<Row> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) {
      const unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), p);
      if (r != 0) {
        rows[i].emplace_back(c, r);
        col_rows[c].insert(i);
      }
    }
  auto inverse = [p](unsigned long a) {
    // Fermat: a^(p-2) mod p.
    unsigned long long result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<unsigned long>(result);
  };
  std::vector<bool> alive(m.rows(), true);
  std::size_t rank = 0;
  for (;;) {
    // Markowitz choice among live rows.
    std::size_t best_r = m.rows(), best_c = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i] || rows[i].empty()) continue;
      for (const auto& [c, v] : rows[i]) {
        const std::size_t cost = (rows[i].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = i;
          best_c = c;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_r == m.rows()) break;
    ++rank;
    alive[best_r] = false;
    const Row pivot_row = rows[best_r];
    unsigned long pv = 0;
    for (const auto& [c, v] : pivot_row)
      if (c == best_c) pv = v;
    const unsigned long pinv = inverse(pv);
    for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_r);
    const std::vector<std::size_t> targets(col_rows[best_c].begin(), col_rows[best_c].end());
    for (std::size_t i : targets) {
      unsigned long a = 0;
      for (const auto& [c, v] : rows[i])
        if (c == best_c) a = v;
      const unsigned long f = static_cast<unsigned long>(
          static_cast<unsigned long long>(a) * pinv % p);
      // rows[i] -= f * pivot_row
      Row merged;
      std::size_t x = 0, y = 0;
      const Row& ri = rows[i];
      while (x < ri.size() || y < pivot_row.size()) {
        if (y == pivot_row.size() || (x < ri.size() && ri[x].first < pivot_row[y].first)) {
          merged.push_back(ri[x++]);
        } else {
          const std::size_t c = pivot_row[y].first;
          unsigned long long sub = static_cast<unsigned long long>(f) * pivot_row[y].second % p;
          unsigned long long cur = 0;
          if (x < ri.size() && ri[x].first == c) cur = ri[x++].second;
          const unsigned long val = static_cast<unsigned long>((cur + p - sub) % p);
          ++y;
          if (val != 0) merged.emplace_back(c, val);
          else col_rows[c].erase(i);
          if (val != 0 && cur == 0) col_rows[c].insert(i);
        }
      }
      rows[i] = std::move(merged);
    }
    rows[best_r].clear();
  }
  return rank;
}

std::size_t rank_mod_p(const ZMatrix& m, unsigned long p) {
  return rank_mod_p(SparseMatrix::from_dense(m), p);
}

std::vector<BigInt> smith_invariants(const SparseMatrix& m) {
  using Row = SparseMatrix::Row;
  std::vector<Row> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i] = m.row(i);
    for (const auto& e : rows[i]) col_rows[e.first].insert(i);
  }
  std::vector<bool> alive(m.rows(), true);
  std::size_t units = 0;

  // Unit pivots: eliminate the pivot column by row operations; the pivot
  // row is then cleared by column operations that touch nothing else.
  for (;;) {
    std::size_t best_r = m.rows(), best_c = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      for (const auto& [c, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[i].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = i;
          best_c = c;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_r == m.rows()) break;
    ++units;
    alive[best_r] = false;
    const Row pivot_row = std::move(rows[best_r]);
    rows[best_r].clear();
    BigInt pv;
    for (const auto& [c, v] : pivot_row)
      if (c == best_c) pv = v;
    for (const auto& e : pivot_row) col_rows[e.first].erase(best_r);
    const std::vector<std::size_t> targets(col_rows[best_c].begin(), col_rows[best_c].end());
    for (std::size_t i : targets) {
      BigInt a;
      for (const auto& [c, v] : rows[i])
        if (c == best_c) a = v;
      const BigInt f = a * pv;  // pv is its own inverse
      Row merged;
      merged.reserve(rows[i].size() + pivot_row.size());
      std::size_t x = 0, y = 0;
      const Row& ri = rows[i];
      while (x < ri.size() || y < pivot_row.size()) {
        if (y == pivot_row.size() || (x < ri.size() && ri[x].first < pivot_row[y].first)) {
          merged.push_back(ri[x++]);
        } else {
          const std::size_t c = pivot_row[y].first;
          const bool had = x < ri.size() && ri[x].first == c;
          BigInt val = had ? ri[x++].second : BigInt(0);
          val -= f * pivot_row[y].second;
          ++y;
          if (val != 0) {
            merged.emplace_back(c, std::move(val));
            if (!had) col_rows[c].insert(i);
          } else if (had) {
            col_rows[c].erase(i);
          }
        }
      }
      rows[i] = std::move(merged);
    }
  }

  // Dense SNF on what is left.
  std::vector<std::size_t> live_rows;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (alive[i] && !rows[i].empty()) live_rows.push_back(i);
  std::vector<std::size_t> live_cols;
  for (std::size_t c = 0; c < col_rows.size(); ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  std::vector<BigInt> out(units, BigInt(1));
  if (!live_rows.empty()) {
    std::vector<std::size_t> col_pos(m.cols(), 0);
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
    ZMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t k = 0; k < live_rows.size(); ++k)
      for (const auto& [c, v] : rows[live_rows[k]]) rest(k, col_pos[c]) = v;
    auto tail = smith_dense_inplace(rest);
    out.insert(out.end(), tail.begin(), tail.end());
  }
  return out;
}

std::vector<BigInt> smith_invariants(const ZMatrix& m) {
  ZMatrix copy = m;
  return smith_dense_inplace(copy);
}

ZMatrix hermite_rows(ZMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool found = false;
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (p == rows || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p == rows) break;
      found = true;
      swap_rows(a, r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i)
        if (a(i, c) != 0) {
          sub_row(a, i, r, fdiv(a(i, c), a(r, c)), c);
          if (a(i, c) != 0) done = false;
        }
      if (done) break;
    }
    if (!found) continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i)
      if (a(i, c) != 0) sub_row(a, i, r, fdiv(a(i, c), a(r, c)), c);
    ++r;
  }
  return a.block(0, 0, r, cols);
}

ZMatrix kernel_basis(const ZMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // Row-reduce [m^T | I]; rows whose left part vanishes span the kernel.
  ZMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(j, i);
    aug(i, k + i) = 1;
  }
  ZMatrix h = hermite_rows(aug);
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < k && zero; ++j) zero = h(i, j) == 0;
    if (zero) kernel_rows.push_back(i);
  }
  ZMatrix basis(n, kernel_rows.size());
  for (std::size_t c = 0; c < kernel_rows.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c) = h(kernel_rows[c], k + i);
  return basis;
}

ZMatrix canonical_basis(const ZMatrix& gens) { return hermite_rows(gens.transpose()).transpose(); }

ZMatrix saturate(const ZMatrix& gens) {
  if (gens.cols() == 0) return ZMatrix(gens.rows(), 0);
  const ZMatrix perp = kernel_basis(gens.transpose());
  if (perp.cols() == 0) return ZMatrix::identity(gens.rows());
  return kernel_basis(perp.transpose());
}

ZMatrix intersect_lattices(const ZMatrix& b1, const ZMatrix& b2) {
  const std::size_t d = b1.rows();
  const std::size_t k1 = b1.cols();
  const std::size_t k2 = b2.cols();
  ZMatrix joint(d, k1 + k2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k1; ++j) joint(i, j) = b1(i, j);
    for (std::size_t j = 0; j < k2; ++j) joint(i, k1 + j) = -b2(i, j);
  }
  const ZMatrix ker = kernel_basis(joint);
  if (ker.cols() == 0) return ZMatrix(d, 0);
  return canonical_basis(b1 * ker.block(0, 0, k1, ker.cols()));
}

std::optional<QMatrix> solve_rational(const ZMatrix& a, const ZMatrix& b) {
  const std::size_t rows = a.rows();
  const std::size_t n = a.cols();
  const std::size_t t = b.cols();
  QMatrix m(rows, n + t);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < t; ++j) m(i, n + j) = b(i, j);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < n + t; ++j) std::swap(m(r, j), m(p, j));
    const mpq_class inv = 1 / m(r, c);
    for (std::size_t j = c; j < n + t; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const mpq_class f = m(i, c);
      for (std::size_t j = c; j < n + t; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (m(i, n + j) != 0) return std::nullopt;
  QMatrix x(n, t);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < t; ++j) x(pivots[k], j) = m(k, n + j);
  return x;
}

std::optional<ZMatrix> solve_integral(const ZMatrix& basis, const ZMatrix& targets) {
  auto x = solve_rational(basis, targets);
  if (!x) return std::nullopt;
  ZMatrix z(x->rows(), x->cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      const mpq_class& v = (*x)(i, j);
      if (v.get_den() != 1) return std::nullopt;
      z(i, j) = v.get_num();
    }
  return z;
}

}  // namespace kmss::linalg
