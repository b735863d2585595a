#include "kmss/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kmss {

ZMatrix to_big(const IntMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = static_cast<long>(m(i, j));
  return z;
}

IntMatrix checked_multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(aik, b(k, j), &prod) ||
            __builtin_add_overflow(p(i, j), prod, &p(i, j)))
          throw std::overflow_error("integer matrix product overflows 64 bits");
      }
    }
  return p;
}

ZMatrix stack_rows(const std::vector<ZMatrix>& blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.rows();
  ZMatrix out(total, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

SparseMatrix SparseMatrix::from_dense(const ZMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.rows_[i].emplace_back(j, m(i, j));
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const BigInt& value) {
  if (value == 0) return;
  Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, Entry{c, value});
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseMatrix::is_zero() const { return nonzeros() == 0; }

ZMatrix SparseMatrix::to_dense() const {
  ZMatrix d(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [c, v] : rows_[i]) d(i, c) = v;
  return d;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::size_t, BigInt> acc;
    for (const auto& [k, aik] : a.row(i))
      for (const auto& [j, bkj] : b.row(k)) acc[j] += aik * bkj;
    for (auto& [j, v] : acc)
      if (v != 0) p.rows_[i].emplace_back(j, std::move(v));
  }
  return p;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

}  // namespace kmss
