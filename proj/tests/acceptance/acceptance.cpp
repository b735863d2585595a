// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check is exact; wall-clock limits are enforced as well.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kmss/error.hpp"
#include "kmss/gcm.hpp"
#include "kmss/holim.hpp"
#include "kmss/invariants.hpp"
#include "kmss/sseq.hpp"
#include "kmss/system.hpp"
#include "kmss/tits.hpp"
#include "kmss/weyl.hpp"
#include "oracles.hpp"
#include "random_functor.hpp"
#include "support.hpp"

namespace {

using namespace kmss;
using kmss::testing::sys;

// Collects failure notes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::string str(std::size_t v) { return std::to_string(v); }

void finite_type_oracle(Check& c) {
  const std::vector<std::pair<std::string, std::size_t>> orders = {
      {"A1", 2}, {"A1xA1", 4}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}};
  for (const auto& [name, order] : orders) {
    const auto a = kmss::testing::gcm(name);
    c.expect(is_finite_type(a, a.full_set()), name + " not recognised as finite type");
    const auto n = enumerate_group(realization(a), a.full_set(), kDefaultGroupCap).size();
    c.expect(n == order, name + ": BFS order " + str(n) + ", expected " + str(order));
  }
  for (const auto& name : {"affine", "hyp24"}) {
    const auto a = kmss::testing::gcm(name);
    c.expect(!is_finite_type(a, a.full_set()), std::string(name) + " wrongly finite type");
  }
}

void differential_arithmetic(Check& c) {
  for (unsigned long q : {3UL, 5UL, 7UL, 11UL}) {
    const std::size_t window = 6 * q;
    const auto adm = admissible_odd_differentials(q, window);
    c.expect(!adm.empty() && adm.front() == q, "q=" + std::to_string(q) + ": minimum r is not q");
    for (std::size_t r : adm) {
      c.expect((2 * r - 1) % 2 == 1, "even index d_" + str(2 * r - 1));
      c.expect(2 * r - 1 >= 2 * q - 1, "index below 2q-1");
    }
    c.expect(admissible_odd_differentials(q, 2 * q - 2).empty(), "window below 2q-1 not empty");
  }
}

void collapse_certificate_check(Check& c) {
  const auto affine = sys("affine");
  for (unsigned long q : {3UL, 5UL}) {
    const auto cert = collapse_certificate(affine, q);
    c.expect(cert.collapsed && cert.reason == CollapseReason::PrimeBound,
             "affine not certified at q=" + std::to_string(q));
  }
  const auto refused = collapse_certificate(affine, 2);
  c.expect(!refused.collapsed && refused.torsion_prime, "affine certified at the torsion prime 2");
}

void terminal_object_collapse(Check& c) {
  const std::size_t k_max = 20;
  for (const auto& name : kmss::testing::finite_types()) {
    const auto s = sys(name);
    for (unsigned long q : {5UL, 7UL, 11UL}) {
      if (s.is_torsion_prime(q)) continue;
      const auto page = e2_page(s, q, 12);
      for (const auto& [ij, h] : page.entries)
        if (ij.first > 0) c.expect(h.is_zero(), name + ": E2 nonzero off column 0");
    }
    const auto molien = kmss::testing::brute_molien(s.realization, s.cartan.full_set(), k_max / 2);
    const auto series = poincare_series_bk(s, 5, k_max);
    for (std::size_t k = 0; k <= k_max; ++k) {
      const BigInt expected = k % 2 == 0 ? molien[k / 2] : BigInt(0);
      c.expect(series[k].group.free_rank == expected && series[k].group.torsion.empty(),
               name + ": H^" + str(k) + " differs from the Molien count");
    }
  }
  // A2: 1 / ((1 - t^4)(1 - t^6)).
  const auto a2 = poincare_series_bk(sys("A2"), 5, k_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::size_t count = 0;
    for (std::size_t a = 0; 4 * a <= k; ++a)
      if ((k - 4 * a) % 6 == 0) ++count;
    c.expect(a2[k].group.free_rank == count, "A2: coefficient of t^" + str(k));
  }
}

void column_identity(Check& c) {
  for (const auto& name : {"affine", "rank3pair"}) {
    const auto s = sys(name);
    for (unsigned long q : {3UL, 5UL}) {
      const auto page = e2_page(s, q, 12);
      for (std::size_t j = 0; j <= 12; j += 2) {
        const auto inv = weyl_invariants(s.realization, j / 2);
        c.expect(page.at(0, j).free_rank == inv.rank() && page.at(0, j).torsion.empty(),
                 std::string(name) + ": column 0 at j=" + str(j) + " q=" + std::to_string(q));
      }
      const auto restriction = restriction_analysis(s, q, 12);
      c.expect(restriction.consistent, std::string(name) + ": column 0 lattice differs from invariants");
    }
  }
}

void serre_check(Check& c) {
  const auto affine = sys("affine");
  const auto report = serre_comparison(affine, 3, 3, 8);
  c.expect(report.consistent, "serre comparison on affine, q=3");
  c.expect(report.cells.size() == 4 * 5, "unexpected cell count");
  const std::vector<ZMatrix> trivial{ZMatrix::identity(1), ZMatrix::identity(1)};
  for (unsigned long q : {3UL, 5UL, 7UL}) {
    const auto h = group_cohomology_weyl(affine, trivial, q, 4);
    const auto [h0, h1] = kmss::testing::amalgam_oracle(trivial, q);
    c.expect(h.at(0) == h0 && h0.free_rank == 1 && h0.torsion.empty(), "H^0 of the infinite dihedral group");
    c.expect(h.at(1) == h1 && h1.is_zero(), "H^1 of the infinite dihedral group");
    for (std::size_t i = 2; i <= 4; ++i) c.expect(h.at(i).is_zero(), "H^" + str(i) + " nonzero");
  }
}

void tits_claim(Check& c) {
  const std::vector<Coefficients> rings{Coefficients::integers(), Coefficients::mod(2), Coefficients::mod(3)};
  for (const auto& name : {"affine", "rank3pair", "rank3"}) {
    const auto s = sys(name);
    for (const auto& coeffs : rings) {
      const auto verdicts = tits_acyclicity(s, 8, coeffs);
      for (const auto& v : verdicts)
        c.expect(v.acyclic(), std::string(name) + " over " + coeffs.to_string() + ": k=" + str(v.k));
      const auto h00 = verdicts.at(0).cohomology.at(0);
      c.expect(h00.free_rank == 1 && h00.torsion.empty(), std::string(name) + ": k=0 degree 0 is not rank 1");
    }
  }
}

void engine_properties(Check& c) {
  const auto functors = kmss::testing::random_functors(20240601, 200);
  for (std::size_t n = 0; n < functors.size(); ++n) {
    const auto& f = functors[n].presentation;
    const auto complex = build_complex(f);
    for (std::size_t i = 0; i + 1 < complex.differentials.size(); ++i)
      c.expect((complex.differentials[i + 1] * complex.differentials[i]).is_zero(), "d^2 != 0 on functor " + str(n));
    const auto h = cohomology(complex, Coefficients::integers());
    c.expect(h.at(0).free_rank == kmss::testing::equalizer_rank(f) && h.at(0).torsion.empty(),
             "lim^0 differs from the equalizer on functor " + str(n));
    for (unsigned long q : {2UL, 3UL, 5UL})
      c.expect(uct_check(complex, q).consistent, "UCT on functor " + str(n) + " q=" + std::to_string(q));
  }
  const std::vector<std::pair<std::string, unsigned long>> pages = {
      {"A1", 3}, {"A2", 5}, {"B2", 3}, {"G2", 5}, {"A3", 5}, {"B3", 5},
      {"affine", 3}, {"affine", 5}, {"rank3", 5}, {"rank3pair", 3}, {"rank3pair", 5}, {"hyp24", 3}};
  for (const auto& [name, q] : pages)
    c.expect(uct_consistency(sys(name), q, 12).consistent, "UCT on the page of " + name + " q=" + std::to_string(q));
  const auto pullback = build_complex(kmss::testing::pullback_functor());
  const auto z = cohomology(pullback, Coefficients::integers());
  c.expect(z.at(0) == DegreeCohomology{1, {}}, "pullback lim^0");
  c.expect(z.at(1) == DegreeCohomology{0, {{2, 1}}}, "pullback lim^1 is not Z/2");
  c.expect(uct_check(pullback, 2).consistent, "UCT on the pullback functor");
}

void torsion_bounds(Check& c) {
  const auto affine = sys("affine");
  for (auto [q, r] : {std::pair{3UL, 3UL}, std::pair{5UL, 5UL}}) {
    unsigned previous = ~0U;
    for (std::size_t samples = 1; samples <= 30; ++samples) {
      const auto b = torsion_exponent_bound(affine, q, r, 2 * r, samples);
      const std::string tag = "(q,r)=(" + std::to_string(q) + "," + std::to_string(r) + ") samples=" + str(samples);
      c.expect(b.exponent >= 1, tag + ": exponent 0");
      c.expect(b.exponent <= previous, tag + ": not antitone");
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), q, b.exponent);
      c.expect(b.value() == power, tag + ": value is not a power of q");
      previous = b.exponent;
      unsigned smallest = ~0U;
      for (std::size_t k = 0; k < b.primes.size(); ++k) {
        const unsigned v = kmss::testing::direct_valuation(b.primes[k], r - 1, q);
        c.expect(b.valuations[k] == v, tag + ": valuation at p=" + std::to_string(b.primes[k]));
        smallest = std::min(smallest, v);
      }
      c.expect(b.primes.size() == samples && b.exponent == smallest, tag + ": bound is not the minimum");
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "finite-type oracle", 10, finite_type_oracle},
      {2, "first possible differential d_{2q-1}", 10, differential_arithmetic},
      {3, "collapse certificate 2q >= n+1", 10, collapse_certificate_check},
      {4, "terminal-object collapse and Molien series", 60, terminal_object_collapse},
      {5, "column 0 equals Weyl invariants", 60, column_identity},
      {6, "E2 comparison with group cohomology", 60, serre_check},
      {7, "Tits building acyclicity", 300, tits_claim},
      {8, "engine properties", 120, engine_properties},
      {9, "torsion-exponent bounds", 10, torsion_bounds},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds <= cr.limit_seconds, "exceeded the time limit");
    std::printf("%s criterion %d: %s (%.2f s)\n", check.ok() ? "PASS" : "FAIL", cr.number, cr.title.c_str(), seconds);
    std::size_t shown = 0;
    for (const auto& f : check.failures())
      if (shown++ < 10) std::printf("    %s\n", f.c_str());
    if (!check.ok()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
