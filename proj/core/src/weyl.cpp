#include "kmss/weyl.hpp"

#include <stdexcept>
#include <unordered_set>

#include "kmss/error.hpp"

namespace kmss {

namespace {

std::int64_t checked_fma(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
    throw std::overflow_error("root coordinates overflow 64 bits");
  return acc;
}

}  // namespace

WeylElement simple_reflection(const Realization& real, std::size_t i) {
  // r_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, and
  // <lambda, alpha_i^vee> is the i-th coordinate of lambda.
  IntMatrix m = IntMatrix::identity(real.rank);
  for (std::size_t t = 0; t < real.rank; ++t) m(t, i) -= real.roots(i, t);
  return WeylElement{std::move(m), 1, {i}};
}

std::optional<unsigned> coxeter_order(const GCM& a, std::size_t i, std::size_t j) {
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return std::nullopt;
  }
}

bool is_positive_root(const Realization& real, const std::vector<std::int64_t>& root) {
  std::int64_t s = 0;
  for (std::size_t t = 0; t < real.rank; ++t) s = checked_fma(s, root[t], real.height[t]);
  return s > 0;
}

std::vector<std::int64_t> act_on_root(const Realization& real, const IntMatrix& w, std::size_t j) {
  std::vector<std::int64_t> out(real.rank, 0);
  for (std::size_t r = 0; r < real.rank; ++r)
    for (std::size_t c = 0; c < real.rank; ++c) out[r] = checked_fma(out[r], w(r, c), real.roots(j, c));
  return out;
}

bool has_right_descent(const Realization& real, const IntMatrix& w, std::size_t j) {
  return !is_positive_root(real, act_on_root(real, w, j));
}

namespace {

WeylElement identity_element(const Realization& real) {
  return WeylElement{IntMatrix::identity(real.rank), 0, {}};
}

// Next BFS level: right-multiply by generators in `gens` that raise the
// length, keep those passing `keep`, and drop duplicates.
template <class Keep>
std::vector<WeylElement> next_level(const Realization& real, const std::vector<WeylElement>& level,
                                    const std::vector<IntMatrix>& reflections, Subset gens,
                                    Keep&& keep) {
  std::vector<WeylElement> out;
  std::unordered_set<IntMatrix, IntMatrixHash> seen;
  for (const auto& w : level)
    for (std::size_t j : members(gens)) {
      if (has_right_descent(real, w.matrix, j)) continue;
      IntMatrix u = checked_multiply(w.matrix, reflections[j]);
      if (!keep(u) || !seen.insert(u).second) continue;
      auto word = w.word;
      word.push_back(j);
      out.push_back(WeylElement{std::move(u), w.length + 1, std::move(word)});
    }
  return out;
}

std::vector<IntMatrix> reflection_matrices(const Realization& real) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < real.size(); ++i) out.push_back(simple_reflection(real, i).matrix);
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_group(const Realization& real, Subset J, std::size_t cap) {
  const auto reflections = reflection_matrices(real);
  std::vector<WeylElement> all;
  std::vector<WeylElement> level{identity_element(real)};
  while (!level.empty()) {
    if (all.size() + level.size() > cap)
      throw Error(ErrorCode::CapExceeded,
                  "W_" + format_subset(J) + " has more than " + std::to_string(cap) + " elements");
    std::vector<WeylElement> next;
    try {
      next = next_level(real, level, reflections, J, [](const IntMatrix&) { return true; });
    } catch (const std::overflow_error&) {
      throw Error(ErrorCode::CapExceeded, "W_" + format_subset(J) + " is infinite (entries exceed 64 bits)");
    }
    for (auto& w : level) all.push_back(std::move(w));
    level = std::move(next);
  }
  return all;
}

const std::vector<WeylElement>& CosetTable::of_length(std::size_t k) const {
  static const std::vector<WeylElement> kNone;
  return k < by_length.size() ? by_length[k] : kNone;
}

CosetTable min_coset_reps(const Realization& real, Subset J, std::size_t max_length) {
  // W^J is closed under removing letters on the left, so grow by s_j * w.
  // s_j * w is longer than w iff w^{-1} has no right descent at j; the
  // inverses are carried along for that test.
  const auto reflections = reflection_matrices(real);
  struct Node {
    WeylElement element;
    IntMatrix inverse;
  };
  std::vector<Node> level{{identity_element(real), IntMatrix::identity(real.rank)}};
  CosetTable table;
  table.J = J;
  table.by_length.push_back({level.front().element});
  for (std::size_t k = 0; k < max_length; ++k) try {
    std::vector<Node> next;
    std::unordered_set<IntMatrix, IntMatrixHash> seen;
    for (const auto& node : level)
      for (std::size_t j = 0; j < real.size(); ++j) {
        if (has_right_descent(real, node.inverse, j)) continue;
        IntMatrix u = checked_multiply(reflections[j], node.element.matrix);
        bool minimal = true;
        for (std::size_t i : members(J)) minimal = minimal && !has_right_descent(real, u, i);
        if (!minimal || !seen.insert(u).second) continue;
        std::vector<std::size_t> word{j};
        word.insert(word.end(), node.element.word.begin(), node.element.word.end());
        next.push_back({WeylElement{std::move(u), k + 1, std::move(word)},
                        checked_multiply(node.inverse, reflections[j])});
      }
    std::vector<WeylElement> elements;
    for (const auto& node : next) elements.push_back(node.element);
    table.by_length.push_back(std::move(elements));
    level = std::move(next);
  } catch (const std::overflow_error&) {
    throw Error(ErrorCode::CapExceeded, "length " + std::to_string(k + 1) + " representatives of W/W_" +
                                            format_subset(J) + " exceed 64-bit entries");
  }
  return table;
}

std::vector<std::uint64_t> group_length_series(const Realization& real, Subset J,
                                               std::size_t max_length, std::size_t cap) {
  std::vector<std::uint64_t> series(max_length + 1, 0);
  for (const auto& w : enumerate_group(real, J, cap))
    if (w.length <= max_length) ++series[w.length];
  return series;
}

std::vector<std::uint64_t> coset_length_series(const Realization& real, Subset J,
                                               std::size_t max_length) {
  const CosetTable table = min_coset_reps(real, J, max_length);
  std::vector<std::uint64_t> series;
  for (const auto& level : table.by_length) series.push_back(level.size());
  return series;
}

}  // namespace kmss
