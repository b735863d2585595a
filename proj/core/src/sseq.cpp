#include "kmss/sseq.hpp"

#include <algorithm>

#include "kmss/error.hpp"
#include "kmss/invariants.hpp"
#include "kmss/linalg.hpp"
#include "kmss/weyl.hpp"

namespace kmss {

DegreeCohomology BigradedPage::at(std::size_t i, std::size_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? DegreeCohomology{} : it->second;
}

BigradedPage e2_page(const KacMoodySystem& system, unsigned long q, std::size_t j_max) {
  return e2_page(system, q, j_max, Coefficients::local(q));
}

BigradedPage e2_page(const KacMoodySystem& system, unsigned long q, std::size_t j_max,
                     Coefficients coefficients) {
  system.require_good_prime(q);
  BigradedPage page;
  page.q = q;
  page.coefficients = coefficients;
  page.column_bound = system.poset.column_bound();
  page.j_max = j_max;
  for (std::size_t j = 0; j <= j_max; j += 2) {
    const auto lim = lim_of_invariants(system, q, j, coefficients);
    for (std::size_t i = 0; i <= page.column_bound; ++i) page.entries[{i, j}] = lim.at(i);
  }
  return page;
}

std::vector<std::size_t> admissible_odd_differentials(unsigned long q, std::size_t column_bound) {
  if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime");
  std::vector<std::size_t> out;
  for (std::size_t r = 2; 2 * r - 1 <= column_bound; ++r)
    if ((r - 1) % (q - 1) == 0) out.push_back(r);
  return out;
}

unsigned long primitive_root(unsigned long q) {
  if (q < 3 || !is_prime(q)) throw Error(ErrorCode::InvalidArgument, "primitive_root needs an odd prime");
  std::vector<unsigned long> factors;
  unsigned long m = q - 1;
  for (unsigned long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      factors.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) factors.push_back(m);
  auto power = [q](unsigned long base, unsigned long e) {
    unsigned long long result = 1, b = base % q;
    while (e) {
      if (e & 1) result = result * b % q;
      b = b * b % q;
      e >>= 1;
    }
    return result;
  };
  for (unsigned long g = 2; g < q; ++g) {
    bool generator = true;
    for (unsigned long f : factors)
      if (power(g, (q - 1) / f) == 1) generator = false;
    if (generator) return g;
  }
  throw std::logic_error("no primitive root found");
}

BigInt TorsionBound::value() const {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), q, exponent);
  return v;
}

TorsionBound torsion_exponent_bound(const KacMoodySystem& system, unsigned long q, std::size_t r,
                                    std::size_t j, std::size_t samples) {
  (void)j;  // p^{j-r+1} is prime to q and never contributes.
  if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime");
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "differentials start at r = 2");
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "at least one sample prime is needed");
  TorsionBound bound;
  bound.q = q;
  if ((r - 1) % (q - 1) != 0) return bound;
  for (unsigned long p = 2; bound.primes.size() < samples; ++p) {
    if (!is_prime(p) || p == q || system.is_torsion_prime(p)) continue;
    BigInt x;
    mpz_ui_pow_ui(x.get_mpz_t(), p, r - 1);
    x -= 1;
    bound.primes.push_back(p);
    bound.valuations.push_back(linalg::valuation(x, q));
  }
  bound.exponent = *std::min_element(bound.valuations.begin(), bound.valuations.end());
  return bound;
}

std::string_view reason_name(CollapseReason reason) {
  switch (reason) {
    case CollapseReason::PrimeBound: return "PaperCriterion";
    case CollapseReason::WindowEmpty: return "WindowEmpty";
    case CollapseReason::NotCertified: return "NotCertified";
  }
  return "NotCertified";
}

CollapseCertificate certify_collapse(std::size_t n, unsigned long q, std::size_t column_bound,
                                     bool torsion_prime) {
  CollapseCertificate cert;
  cert.n = n;
  cert.q = q;
  cert.column_bound = column_bound;
  cert.torsion_prime = torsion_prime;
  cert.admissible_differentials = admissible_odd_differentials(q, column_bound);
  if (torsion_prime) return cert;
  if (2 * q >= n + 1) {
    cert.collapsed = true;
    cert.reason = CollapseReason::PrimeBound;
  } else if (cert.admissible_differentials.empty()) {
    cert.collapsed = true;
    cert.reason = CollapseReason::WindowEmpty;
  }
  return cert;
}

CollapseCertificate collapse_certificate(const KacMoodySystem& system, unsigned long q,
                                         std::size_t samples) {
  auto cert = certify_collapse(system.size(), q, system.poset.column_bound(), system.is_torsion_prime(q));
  if (!cert.torsion_prime)
    for (std::size_t r : cert.admissible_differentials)
      cert.torsion_bounds[r] = torsion_exponent_bound(system, q, r, 2 * r, samples).exponent;
  return cert;
}

namespace {

void require_collapse(const KacMoodySystem& system, unsigned long q) {
  const auto cert = collapse_certificate(system, q);
  if (!cert.collapsed)
    throw Error(ErrorCode::NotCollapsed, "no collapse certificate for q = " + std::to_string(q) + " (" +
                                             std::string(reason_name(cert.reason)) + ")");
}

}  // namespace

std::vector<TotalDegree> assemble_total_degrees(const BigradedPage& page, std::size_t k_max) {
  std::vector<TotalDegree> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    TotalDegree total{k, {}};
    for (std::size_t i = 0; i <= std::min(k, page.column_bound); ++i) {
      const auto e = page.at(i, k - i);
      total.group.free_rank += e.free_rank;
      total.group.torsion.insert(total.group.torsion.end(), e.torsion.begin(), e.torsion.end());
    }
    std::sort(total.group.torsion.begin(), total.group.torsion.end());
    out.push_back(std::move(total));
  }
  return out;
}

std::vector<TotalDegree> poincare_series_bk(const KacMoodySystem& system, unsigned long q,
                                            std::size_t k_max) {
  require_collapse(system, q);
  return assemble_total_degrees(e2_page(system, q, k_max), k_max);
}

UctReport uct_check(const CochainComplex& complex, unsigned long q) {
  const auto local = cohomology(complex, Coefficients::local(q));
  const auto field = cohomology(complex, Coefficients::mod(q));
  UctReport report;
  for (std::size_t i = 0; i < complex.ranks.size(); ++i) {
    UctRow row;
    row.degree = i;
    row.field_dimension = field.at(i).free_rank;
    row.tensor_count = local.at(i).free_rank + local.at(i).torsion.size();
    row.tor_count = local.at(i + 1).torsion.size();
    report.consistent = report.consistent && row.ok();
    report.rows.push_back(row);
  }
  return report;
}

UctReport uct_consistency(const KacMoodySystem& system, unsigned long q, std::size_t k_max) {
  require_collapse(system, q);
  const auto local = e2_page(system, q, k_max, Coefficients::local(q));
  const auto field = e2_page(system, q, k_max, Coefficients::mod(q));
  UctReport report;
  for (std::size_t k = 0; k <= k_max; ++k) {
    UctRow row;
    row.degree = k;
    for (std::size_t i = 0; i <= std::min(k, local.column_bound); ++i) {
      const std::size_t j = k - i;
      row.field_dimension += field.at(i, j).free_rank;
      row.tensor_count += local.at(i, j).free_rank + local.at(i, j).torsion.size();
      row.tor_count += local.at(i + 1, j).torsion.size();
    }
    report.consistent = report.consistent && row.ok();
    report.rows.push_back(row);
  }
  return report;
}

RestrictionReport restriction_analysis(const KacMoodySystem& system, unsigned long q,
                                       std::size_t j_max) {
  require_collapse(system, q);
  RestrictionReport report;
  report.nilpotency_bound = system.size();
  const std::size_t empty_object = *system.poset.index_of(0);
  for (std::size_t m = 0; 2 * m <= j_max; ++m) {
    const auto complex = build_complex(invariant_functor(system, m));
    const auto lim = cohomology(complex, Coefficients::local(q));
    const auto weyl = weyl_invariants(system.realization, m);

    RestrictionRow row;
    row.degree = 2 * m;
    row.column_zero_rank = lim.at(0).free_rank;
    row.weyl_invariant_rank = weyl.rank();

    // Compatible families, read off at the empty set where F(empty) is all
    // of Sym^m in its standard basis.
    const ZMatrix d0 = complex.differentials.empty() ? ZMatrix(0, complex.ranks[0])
                                                     : complex.differentials[0].to_dense();
    const ZMatrix families = linalg::kernel_basis(d0);
    ZMatrix projected(weyl.basis.rows(), families.cols());
    for (std::size_t coord = 0; coord < complex.ledger[0].size(); ++coord) {
      const auto& where = complex.ledger[0][coord];
      if (where.chain != empty_object) continue;
      for (std::size_t c = 0; c < families.cols(); ++c) projected(where.basis, c) = families(coord, c);
    }
    row.lattice_match = linalg::canonical_basis(projected) == weyl.basis;
    report.consistent = report.consistent && row.lattice_match &&
                        row.column_zero_rank == row.weyl_invariant_rank;
    report.rows.push_back(row);
  }
  return report;
}

SerreReport serre_comparison(const KacMoodySystem& system, unsigned long q, std::size_t i_max,
                             std::size_t j_max) {
  system.require_good_prime(q);
  SerreReport report;
  std::vector<IntMatrix> reflections;
  for (std::size_t i = 0; i < system.size(); ++i)
    reflections.push_back(simple_reflection(system.realization, i).matrix);
  for (std::size_t j = 0; j <= j_max; j += 2) {
    const auto lim = lim_of_invariants(system, q, j);
    const SymPower sym(system.realization.rank, j / 2);
    std::vector<ZMatrix> module;
    for (const auto& r : reflections) module.push_back(sym_action(sym, r));
    const auto group = group_cohomology_weyl(system, module, q, i_max);
    for (std::size_t i = 0; i <= i_max; ++i) {
      SerreCell cell{i, j, lim.at(i), group.at(i)};
      report.consistent = report.consistent && cell.equal();
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace kmss
